#pragma once

#include <stdexcept>
#include <string>

namespace chunkorder {

enum class Errc {
  // parsing and corpus data
  unclosed_tag,
  unknown_label,
  nested_tag,
  stray_closing_tag,
  empty_chunk,
  duplicate_id,
  io_failure,
  encoding_error,
  empty_corpus,
  // annotation client
  empty_few_shot,
  service_error,
  malformed_annotation,
  auth_missing,
  id_mismatch,
  // statistics
  empty_samples,
  no_eligible_sentences,
  domain_error,
  // embeddings
  schema_error,
  dimension_mismatch,
  non_finite_component,
  empty_selection,
  zero_norm,
  // configuration
  config_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace chunkorder
