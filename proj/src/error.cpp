#include "chunkorder/error.hpp"

namespace chunkorder {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unclosed_tag: return "UnclosedTag";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::nested_tag: return "NestedTag";
    case Errc::stray_closing_tag: return "StrayClosingTag";
    case Errc::empty_chunk: return "EmptyChunk";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::io_failure: return "IoFailure";
    case Errc::encoding_error: return "EncodingError";
    case Errc::empty_corpus: return "EmptyCorpus";
    case Errc::empty_few_shot: return "EmptyFewShot";
    case Errc::service_error: return "ServiceError";
    case Errc::malformed_annotation: return "MalformedAnnotation";
    case Errc::auth_missing: return "AuthMissing";
    case Errc::id_mismatch: return "IdMismatch";
    case Errc::empty_samples: return "EmptySamples";
    case Errc::no_eligible_sentences: return "NoEligibleSentences";
    case Errc::domain_error: return "DomainError";
    case Errc::schema_error: return "SchemaError";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_finite_component: return "NonFiniteComponent";
    case Errc::empty_selection: return "EmptySelection";
    case Errc::zero_norm: return "ZeroNorm";
    case Errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace chunkorder
