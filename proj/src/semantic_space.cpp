#include "chunkorder/semantic_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "chunkorder/error.hpp"

namespace chunkorder {

std::vector<std::string> EmbeddingSet::tag_universe() const {
  std::set<std::string> tags;
  for (const EmbeddingEntry& e : entries) tags.insert(e.tags.begin(), e.tags.end());
  return {tags.begin(), tags.end()};
}

EmbeddingSet load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_failure, "cannot open " + path.string());

  EmbeddingSet es;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path.filename().string() + ":" + std::to_string(line_no);

    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      // 406 is the overflow id: a component too large for a finite double
      if (e.id == 406) raise(Errc::non_finite_component, where + ": " + e.what());
      raise(Errc::schema_error, where + ": " + e.what());
    }
    if (!rec.is_object() || !rec.contains("id") || !rec["id"].is_string() ||
        !rec.contains("vec") || !rec["vec"].is_array())
      raise(Errc::schema_error, where + ": expected {id, tags[], vec[]}");

    EmbeddingEntry entry;
    entry.id = rec["id"].get<std::string>();
    if (!ids.insert(entry.id).second)
      raise(Errc::schema_error, where + ": duplicate id \"" + entry.id + "\"");
    if (rec.contains("tags")) {
      if (!rec["tags"].is_array())
        raise(Errc::schema_error, where + ": tags must be an array");
      for (const auto& t : rec["tags"]) {
        if (!t.is_string()) raise(Errc::schema_error, where + ": tags must be strings");
        entry.tags.push_back(t.get<std::string>());
      }
    }

    const auto& vec = rec["vec"];
    if (vec.empty()) raise(Errc::schema_error, where + ": vec is empty");
    entry.vec.resize(Eigen::Index(vec.size()));
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (!vec[i].is_number())
        raise(Errc::schema_error, where + ": vec components must be numbers");
      const double x = vec[i].get<double>();
      if (!std::isfinite(x))
        raise(Errc::non_finite_component, where + ": component " + std::to_string(i));
      entry.vec[Eigen::Index(i)] = x;
    }

    if (es.dim == 0) es.dim = entry.vec.size();
    if (entry.vec.size() != es.dim)
      raise(Errc::dimension_mismatch,
            where + ": dim " + std::to_string(entry.vec.size()) + " vs " +
                std::to_string(es.dim));
    es.entries.push_back(std::move(entry));
  }
  return es;
}

namespace {

bool has_tag(const EmbeddingEntry& e, std::string_view tag) {
  return std::find(e.tags.begin(), e.tags.end(), tag) != e.tags.end();
}

}  // namespace

Eigen::VectorXd centroid(const EmbeddingSet& es, std::string_view tag) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(es.dim);
  std::size_t n = 0;
  for (const EmbeddingEntry& e : es.entries) {
    if (!has_tag(e, tag)) continue;
    sum += e.vec;
    ++n;
  }
  if (n == 0) raise(Errc::empty_selection, "no entry tagged \"" + std::string(tag) + "\"");
  return sum / double(n);
}

double cosine_similarity(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0)
    raise(Errc::zero_norm, "cosine similarity of a zero vector is undefined");
  return u.dot(v) / (nu * nv);
}

namespace {

// Deterministic start vector; mt19937's output sequence is pinned by the
// standard, so the projection is reproducible across platforms.
Eigen::VectorXd seeded_unit_vector(Eigen::Index d, std::mt19937& rng) {
  Eigen::VectorXd v(d);
  for (Eigen::Index i = 0; i < d; ++i)
    v[i] = (double(rng()) / 4294967295.0) * 2.0 - 1.0;
  const double n = v.norm();
  return n > 0 ? Eigen::VectorXd(v / n) : Eigen::VectorXd::Unit(d, 0);
}

}  // namespace

Projection pca_project(const EmbeddingSet& es, int k) {
  const Eigen::Index n = Eigen::Index(es.entries.size());
  if (k < 1) raise(Errc::domain_error, "pca_project requires k >= 1");
  if (n < k + 1)
    raise(Errc::domain_error, "pca_project requires at least k + 1 entries");

  Eigen::MatrixXd data(n, es.dim);
  Projection proj;
  proj.ids.reserve(es.entries.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    data.row(i) = es.entries[i].vec.transpose();
    proj.ids.push_back(es.entries[i].id);
  }
  const Eigen::RowVectorXd mean = data.colwise().mean();
  data.rowwise() -= mean;
  Eigen::MatrixXd cov = data.transpose() * data / double(n - 1);

  constexpr double kTol = 1e-10;
  constexpr int kMaxIter = 100000;
  std::mt19937 rng(0x5eed01u);

  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(es.dim, k);
  proj.component_variance.assign(k, 0.0);
  const double scale = std::max(cov.diagonal().sum(), 1.0);

  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd v = seeded_unit_vector(es.dim, rng);
    for (int it = 0; it < kMaxIter; ++it) {
      Eigen::VectorXd w = cov * v;
      const double norm = w.norm();
      if (norm < scale * 1e-15) {
        v.setZero();
        break;
      }
      w /= norm;
      const double delta = (w - v).norm();
      v = w;
      if (delta < kTol) break;
    }
    const double lambda = v.isZero() ? 0.0 : v.dot(cov * v);
    if (lambda <= scale * 1e-12) {
      proj.rank_deficient = true;
      break;
    }
    // orient: the largest-magnitude component points up
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v[arg] < 0) v = -v;
    basis.col(j) = v;
    proj.component_variance[j] = lambda;
    proj.rank = j + 1;
    cov -= lambda * v * v.transpose();
  }

  proj.coords = data * basis;  // zero columns beyond the usable rank
  return proj;
}

}  // namespace chunkorder
