#include "graphcrit/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "graphcrit/error.hpp"
#include "graphcrit/rng.hpp"

namespace graphcrit {

EmbeddingTable::EmbeddingTable(int dim) : dim_(dim) {
  if (dim < 1) throw InputError("embedding dimension must be positive");
}

bool EmbeddingTable::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

const Eigen::VectorXd& EmbeddingTable::at(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw InputError("missing embedding for '" + std::string(label) + "'");
  return vectors_[it->second];
}

void EmbeddingTable::insert(std::string label, Eigen::VectorXd vec) {
  if (label.empty()) throw InputError("empty embedding label");
  if (vec.size() != dim_)
    throw InputError("embedding for '" + label + "' has " + std::to_string(vec.size()) +
                     " values, expected " + std::to_string(dim_));
  if (!vec.allFinite()) throw InputError("embedding for '" + label + "' has non-finite values");
  if (vec.norm() == 0.0) throw InputError("embedding for '" + label + "' has zero norm");
  if (index_.count(label)) throw InputError("duplicate embedding label '" + label + "'");
  index_.emplace(label, labels_.size());
  labels_.push_back(std::move(label));
  vectors_.push_back(std::move(vec));
}

std::vector<std::string> EmbeddingTable::missing(std::span<const std::string> wanted) const {
  std::vector<std::string> out;
  for (const auto& l : wanted)
    if (!contains(l)) out.push_back(l);
  return out;
}

void EmbeddingTable::require_all(std::span<const std::string> wanted, std::string_view context) const {
  const auto miss = missing(wanted);
  if (miss.empty()) return;
  std::string msg = "missing embeddings for " + std::to_string(miss.size()) + " label(s)";
  if (!context.empty()) msg += " in " + std::string(context);
  msg += ":";
  for (std::size_t i = 0; i < miss.size() && i < 10; ++i) msg += " '" + miss[i] + "'";
  if (miss.size() > 10) msg += " ...";
  throw InputError(msg);
}

Eigen::MatrixXd EmbeddingTable::rows(std::span<const std::string> labels) const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(labels.size()), dim_);
  for (std::size_t i = 0; i < labels.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = at(labels[i]).transpose();
  return m;
}

EmbeddingTable parse_embeddings(std::istream& in, const std::string& source_name) {
  std::string raw;
  std::size_t line_no = 0;
  int dim = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    std::istringstream header(raw);
    std::string tag;
    header >> tag >> dim;
    if (tag != "#dim" || !header || dim < 1)
      throw ParseError(source_name, line_no, "expected '#dim <d>' header");
    break;
  }
  if (dim == 0) throw InputError(source_name + ": empty embedding file");

  EmbeddingTable table(dim);
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0)
      throw ParseError(source_name, line_no, "expected 'label<TAB>values'");
    std::string label(line.substr(0, tab));
    std::string_view rest = line.substr(tab + 1);
    Eigen::VectorXd vec(dim);
    int count = 0;
    while (true) {
      const auto comma = rest.find(',');
      std::string_view field = rest.substr(0, comma);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(source_name, line_no, "bad number in embedding for '" + label + "'");
      if (count < dim) vec(count) = value;
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != dim)
      throw ParseError(source_name, line_no,
                       "embedding for '" + label + "' has " + std::to_string(count) +
                           " values, expected " + std::to_string(dim));
    try {
      table.insert(std::move(label), std::move(vec));
    } catch (const InputError& e) {
      throw ParseError(source_name, line_no, e.what());
    }
  }
  if (table.size() == 0) throw InputError(source_name + ": no embeddings");
  return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open embedding file " + path.string());
  return parse_embeddings(in, path.string());
}

void write_embeddings(std::ostream& out, const EmbeddingTable& table) {
  out << "#dim " << table.dim() << '\n';
  char buf[64];
  for (const auto& label : table.labels()) {
    out << label << '\t';
    const auto& v = table.at(label);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v(i));
      if (i) out << ',';
      out.write(buf, end - buf);
    }
    out << '\n';
  }
}

void write_embeddings(const std::filesystem::path& path, const EmbeddingTable& table) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_embeddings(out, table);
  if (!out) throw InputError("write failed for " + path.string());
}

Eigen::VectorXd fallback_embed(std::string_view label, int dim, std::uint64_t seed) {
  if (dim < 2) throw InputError("fallback embedding dimension must be >= 2");
  CounterRng rng = CounterRng::keyed({fnv1a64(label), seed});
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.normal();
  const double n = v.norm();
  if (n == 0.0) v(0) = 1.0;
  else v /= n;
  return v;
}

EmbeddingTable fallback_table(std::span<const std::string> labels, int dim, std::uint64_t seed) {
  EmbeddingTable table(dim);
  for (const auto& l : labels)
    if (!table.contains(l)) table.insert(l, fallback_embed(l, dim, seed));
  return table;
}

double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size()) throw InputError("cosine of vectors with different dimensions");
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) throw InputError("cosine of a zero-norm vector");
  return std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
}

Eigen::MatrixXd cosine_matrix(const Eigen::MatrixXd& vectors) {
  Eigen::VectorXd norms = vectors.rowwise().norm();
  if ((norms.array() == 0.0).any()) throw InputError("cosine of a zero-norm vector");
  Eigen::MatrixXd unit = norms.cwiseInverse().asDiagonal() * vectors;
  Eigen::MatrixXd c = unit * unit.transpose();
  return c.cwiseMax(-1.0).cwiseMin(1.0);
}

Eigen::Vector2d PcaProjection::at(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return coordinates.row(static_cast<Eigen::Index>(i)).transpose();
  throw InputError("label not in projection: '" + std::string(label) + "'");
}

PcaProjection pca_2d(const EmbeddingTable& table, std::span<const std::string> labels) {
  if (labels.size() < 3) throw InputError("PCA needs at least 3 points");
  table.require_all(labels, "PCA input");
  const Eigen::MatrixXd x = table.rows(labels);
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  const Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(labels.size() - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success) throw InvariantError("PCA eigensolver failed");
  const Eigen::VectorXd evals = es.eigenvalues().cwiseMax(0.0);  // ascending
  const Eigen::Index d = evals.size();
  const double total = evals.sum();

  PcaProjection out;
  out.labels.assign(labels.begin(), labels.end());
  out.axes.resize(d, 2);
  for (int k = 0; k < 2; ++k) {
    const Eigen::Index col = d - 1 - k;
    if (col < 0) {
      out.axes.col(k).setZero();
      out.explained_variance[k] = 0.0;
      continue;
    }
    Eigen::VectorXd axis = es.eigenvectors().col(col);
    Eigen::Index arg = 0;
    axis.cwiseAbs().maxCoeff(&arg);
    if (axis(arg) < 0) axis = -axis;
    out.axes.col(k) = axis;
    out.explained_variance[k] = total > 0 ? evals(col) / total : 0.0;
  }
  out.coordinates = centered * out.axes;
  // Exact zero mean for the projected cloud (rounding only).
  out.coordinates.rowwise() -= out.coordinates.colwise().mean();
  return out;
}

}  // namespace graphcrit
