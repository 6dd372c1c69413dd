#include "excol/model/collection.hpp"

#include <algorithm>
#include <tuple>

#include "excol/error.hpp"
#include "excol/exactlin/field.hpp"

namespace excol::model {

namespace {
const GradedDims kEmpty;

std::size_t dim_in(const GradedDims& g, int deg) {
  auto it = g.find(deg);
  return it == g.end() ? 0 : it->second;
}
}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Zero:
      return "ZERO";
    case Status::Nonzero:
      return "NONZERO";
    case Status::Unknown:
      break;
  }
  return "UNKNOWN";
}

Status status_from_string(const std::string& s) {
  if (s == "ZERO") return Status::Zero;
  if (s == "NONZERO") return Status::Nonzero;
  if (s == "UNKNOWN") return Status::Unknown;
  throw FormatError("unknown status '" + s + "'");
}

std::string FieldSpec::to_string() const {
  return p == 0 ? "Q" : "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return {};
  if (text == "Fp") return {lin::kDefaultPrime};
  if (text.rfind("Fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(text.substr(3), &used);
      if (used != text.size() - 3) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError("bad field '" + text + "'");
    }
    if (!lin::is_prime(p) || p >= (1ULL << 32)) throw FormatError("field modulus must be a prime below 2^32");
    return {p};
  }
  throw FormatError("bad field '" + text + "' (expected Q, Fp or Fp:<prime>)");
}

std::size_t CollectionSpec::a_dim(int i, int j, int deg) const { return dim_in(a_space(i, j), deg); }
std::size_t CollectionSpec::n_dim(int i, int j, int deg) const { return dim_in(n_space(i, j), deg); }

const GradedDims& CollectionSpec::a_space(int i, int j) const {
  auto it = A.find({i, j});
  return it == A.end() ? kEmpty : it->second;
}

const GradedDims& CollectionSpec::n_space(int i, int j) const {
  auto it = N.find({i, j});
  return it == N.end() ? kEmpty : it->second;
}

const GradedDims* CollectionSpec::letter_space(char letter, int from, int to) const {
  if (from < 1 || to < 1 || from > n || to > n) return nullptr;
  if (letter == 'A') return from < to ? &a_space(from, to) : nullptr;
  if (letter == 'N') return to <= from ? &n_space(to, from) : nullptr;
  return nullptr;
}

const GradedDims* CollectionSpec::output_space(const std::string& kind, const std::vector<int>& path) const {
  if (path.size() != kind.size() + 1 || kind.empty()) return nullptr;
  const auto nn = std::count(kind.begin(), kind.end(), 'N');
  if (nn > 1) return nullptr;
  for (std::size_t s = 0; s < kind.size(); ++s) {
    if (!letter_space(kind[s], path[s], path[s + 1])) return nullptr;
  }
  return letter_space(nn == 1 ? 'N' : 'A', path.front(), path.back());
}

std::size_t CollectionSpec::max_arity() const {
  std::size_t r = 2;
  for (const auto& b : products) r = std::max(r, b.arity());
  return r;
}

bool CollectionSpec::has_canonical_degrees() const {
  if (static_cast<int>(objects.size()) != n) return false;
  return std::all_of(objects.begin(), objects.end(), [](const ObjectInfo& o) { return o.canonical_degree.has_value(); });
}

std::vector<int> CollectionSpec::canonical_degrees() const {
  if (!has_canonical_degrees()) throw ValidationError("canonical degrees are not given for every object");
  std::vector<int> out;
  for (const auto& o : objects) out.push_back(*o.canonical_degree);
  return out;
}

void canonicalize(CollectionSpec& spec) {
  for (auto& b : spec.products) {
    std::sort(b.entries.begin(), b.entries.end(), [](const ProductEntry& x, const ProductEntry& y) {
      return std::tie(x.inputs, x.output) < std::tie(y.inputs, y.output);
    });
  }
  std::sort(spec.products.begin(), spec.products.end(), [](const ProductBlock& x, const ProductBlock& y) {
    return std::make_tuple(x.kind.size(), x.kind, x.path, x.degs) < std::make_tuple(y.kind.size(), y.kind, y.path, y.degs);
  });
  std::sort(spec.qualitative.begin(), spec.qualitative.end(), [](const QualEntry& x, const QualEntry& y) {
    return std::tie(x.src, x.dst, x.deg) < std::tie(y.src, y.dst, y.deg);
  });
  auto sort_component = [](TensorComponent& c) {
    std::sort(c.entries.begin(), c.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  };
  if (spec.fullness) {
    for (auto* list : {&spec.fullness->xi, &spec.fullness->pairing}) {
      for (auto& c : *list) sort_component(c);
      std::sort(list->begin(), list->end(), [](const TensorComponent& x, const TensorComponent& y) {
        return std::tie(x.chain, x.degs) < std::tie(y.chain, y.degs);
      });
    }
  }
}

std::vector<int> extend_degrees(const std::vector<int>& degrees, int k_squared) {
  std::vector<int> out = degrees;
  for (int d : degrees) out.push_back(d - k_squared);
  return out;
}

}  // namespace excol::model
