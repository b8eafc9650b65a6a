#include "codeaut/families.hpp"

#include <numeric>
#include <sstream>

#include "codeaut/error.hpp"

namespace codeaut {

namespace {

std::size_t parse_size(const std::string& token, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty() || token[0] == '-') {
    throw Error(ErrorKind::InvalidArgument, std::string("expected a nonnegative integer for ") + what +
                                                ", got '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

void require_arity(const std::vector<std::string>& tokens, std::size_t n, const char* usage) {
  if (tokens.size() != n) throw Error(ErrorKind::InvalidArgument, std::string("usage: ") + usage);
}

void require_positive_grid(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
}

std::vector<BitVector> row_and_column_matrices(const GridIndex& g) {
  std::vector<BitVector> gens;
  for (std::size_t i = 0; i < g.a; ++i) gens.push_back(row_matrix(g, i));
  for (std::size_t j = 0; j < g.b; ++j) gens.push_back(column_matrix(g, j));
  return gens;
}

}  // namespace

GridIndex GridIndex::normalized(std::size_t rows, std::size_t cols) {
  require_positive_grid(rows, cols);
  if (rows <= cols) return GridIndex{rows, cols, false};
  return GridIndex{cols, rows, true};
}

WreathShape::WreathShape(std::vector<std::size_t> degrees_in) : degrees(std::move(degrees_in)) {
  if (degrees.empty()) throw Error(ErrorKind::InvalidArgument, "empty wreath shape");
  for (std::size_t n : degrees) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "wreath shape degrees must be at least 2");
  }
}

std::size_t WreathShape::block_size(std::size_t level) const {
  if (level > degrees.size()) throw Error(ErrorKind::InvalidArgument, "level out of range");
  std::size_t product = 1;
  for (std::size_t i = 0; i < level; ++i) product *= degrees[i];
  return product;
}

bool WreathShape::beyond_theorem() const {
  for (std::size_t n : degrees) {
    if (n < 3 || n % 2 == 0) return true;
  }
  return false;
}

std::string WreathShape::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(degrees[i]);
  }
  return s;
}

LinearCode elementary(ElementaryKind kind, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "elementary codes need a positive length");
  switch (kind) {
    case ElementaryKind::Zero:
      return LinearCode::zero(n);
    case ElementaryKind::Repetition:
      return LinearCode(n, {BitVector::ones(n)});
    case ElementaryKind::EvenWeight: {
      std::vector<BitVector> gens;
      for (std::size_t i = 1; i < n; ++i) {
        BitVector v = BitVector::unit(n, 0);
        v.set(i);
        gens.push_back(std::move(v));
      }
      return LinearCode(n, gens);
    }
    case ElementaryKind::Full:
      return LinearCode::full(n);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown elementary code kind");
}

BitVector row_matrix(const GridIndex& g, std::size_t i) {
  if (i >= g.a) throw Error(ErrorKind::InvalidArgument, "row index out of range");
  BitVector v(g.size());
  for (std::size_t j = 0; j < g.b; ++j) v.set(g.flatten(i, j));
  return v;
}

BitVector column_matrix(const GridIndex& g, std::size_t j) {
  if (j >= g.b) throw Error(ErrorKind::InvalidArgument, "column index out of range");
  BitVector v(g.size());
  for (std::size_t i = 0; i < g.a; ++i) v.set(g.flatten(i, j));
  return v;
}

LinearCode c0(std::size_t a, std::size_t b) {
  const GridIndex g = GridIndex::normalized(a, b);
  return LinearCode(g.size(), row_and_column_matrices(g));
}

LinearCode c1(std::size_t a, std::size_t b) {
  const GridIndex g = GridIndex::normalized(a, b);
  std::vector<BitVector> gens;
  for (std::size_t i = 0; i < g.a; ++i) {
    const BitVector r = row_matrix(g, i);
    for (std::size_t j = 0; j < g.b; ++j) gens.push_back(r ^ column_matrix(g, j));
  }
  return LinearCode(g.size(), gens);
}

BitVector a_generator(const WreathShape& shape, std::size_t level, std::size_t k, std::size_t l) {
  if (level == 0 || level > shape.levels()) throw Error(ErrorKind::InvalidArgument, "level out of range");
  const std::size_t n = shape.degrees[level - 1];
  if (k >= n || l >= n || k == l) throw Error(ErrorKind::InvalidArgument, "need distinct blocks k, l < n_i");
  const std::size_t block = shape.block_size(level - 1);
  BitVector v(shape.block_size(level));
  for (std::size_t w = 0; w < block; ++w) {
    v.set(k * block + w);
    v.set(l * block + w);
  }
  return v;
}

LinearCode k_code(const WreathShape& shape) {
  LinearCode previous = LinearCode::zero(1);
  for (std::size_t level = 1; level <= shape.levels(); ++level) {
    const std::size_t n = shape.degrees[level - 1];
    const std::size_t block = shape.block_size(level - 1);
    const std::size_t length = block * n;
    std::vector<BitVector> gens;
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& row : previous.basis().rows()) {
        BitVector copy(length);
        for (std::size_t w : row.support()) copy.set(k * block + w);
        gens.push_back(std::move(copy));
      }
    }
    if (level % 2 == 1) {
      for (std::size_t l = 1; l < n; ++l) gens.push_back(a_generator(shape, level, 0, l));
    }
    previous = LinearCode(length, gens);
  }
  return previous;
}

std::size_t k_code_dimension_formula(const WreathShape& shape) {
  const std::size_t i = shape.levels();
  const std::size_t terms = (i % 2 == 1) ? i + 1 : i;
  long long sum = 0;
  for (std::size_t j = 1; j <= terms; ++j) {
    long long product = 1;
    for (std::size_t k = j; k <= i; ++k) product *= static_cast<long long>(shape.degrees[k - 1]);
    sum += (j % 2 == 1) ? product : -product;
  }
  return static_cast<std::size_t>(sum);
}

std::size_t k_code_codistance_formula(const WreathShape& shape) {
  std::size_t product = 1;
  for (std::size_t j = 2; j <= shape.levels(); j += 2) product *= shape.degrees[j - 1];
  return product;
}

Poly2 hamming_generator(unsigned r) {
  if (r < 2 || r > 20) throw Error(ErrorKind::InvalidArgument, "Hamming codes need 2 <= r <= 20");
  const std::size_t n = (std::size_t{1} << r) - 1;
  for (const auto& f : factor_cyclotomic(n).factors) {
    if (f.polynomial.degree() == static_cast<int>(r) && std::gcd(f.coset.front(), n) == 1) {
      return f.polynomial;
    }
  }
  throw Error(ErrorKind::Internal, "no primitive factor of degree " + std::to_string(r));
}

LinearCode hamming(unsigned r) {
  return cyclic_code_from_gen((std::size_t{1} << r) - 1, hamming_generator(r));
}

Poly2 golay_generator() {
  for (const auto& f : factor_cyclotomic(23).factors) {
    if (f.polynomial.degree() == 11) return f.polynomial;
  }
  throw Error(ErrorKind::Internal, "X^23 - 1 has no degree-11 factor");
}

LinearCode golay23() { return cyclic_code_from_gen(23, golay_generator()); }

CodeSource parse_code_source(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error(ErrorKind::InvalidArgument, "missing code family");
  const std::string& family = tokens[0];
  if (family == "c0" || family == "c1") {
    require_arity(tokens, 3, "c0|c1 a b");
    const std::size_t a = parse_size(tokens[1], "a");
    const std::size_t b = parse_size(tokens[2], "b");
    require_positive_grid(a, b);
    if (family == "c0") return C0Family{a, b};
    return C1Family{a, b};
  }
  if (family == "k") {
    require_arity(tokens, 2, "k n1,n2,...");
    std::vector<std::size_t> degrees;
    std::stringstream in(tokens[1]);
    std::string item;
    while (std::getline(in, item, ',')) degrees.push_back(parse_size(item, "degree"));
    return KFamily{WreathShape(std::move(degrees))};
  }
  if (family == "elementary") {
    require_arity(tokens, 3, "elementary {0|1|2|3} n");
    const std::size_t kind = parse_size(tokens[1], "kind");
    if (kind > 3) throw Error(ErrorKind::InvalidArgument, "elementary kind must be 0, 1, 2 or 3");
    const std::size_t n = parse_size(tokens[2], "n");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "elementary codes need a positive length");
    return ElementaryFamily{static_cast<ElementaryKind>(kind), n};
  }
  if (family == "hamming") {
    require_arity(tokens, 2, "hamming r");
    return HammingFamily{static_cast<unsigned>(parse_size(tokens[1], "r"))};
  }
  if (family == "golay") {
    require_arity(tokens, 1, "golay");
    return GolayFamily{};
  }
  if (family == "cyclic") {
    require_arity(tokens, 3, "cyclic N poly");
    return CyclicFromGenerator{parse_size(tokens[1], "N"), Poly2::parse(tokens[2])};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown code family '" + family + "'");
}

LinearCode build_code(const CodeSource& source) {
  struct Builder {
    LinearCode operator()(const C0Family& f) const { return c0(f.a, f.b); }
    LinearCode operator()(const C1Family& f) const { return c1(f.a, f.b); }
    LinearCode operator()(const KFamily& f) const { return k_code(f.shape); }
    LinearCode operator()(const ElementaryFamily& f) const { return elementary(f.kind, f.n); }
    LinearCode operator()(const HammingFamily& f) const { return hamming(f.r); }
    LinearCode operator()(const GolayFamily&) const { return golay23(); }
    LinearCode operator()(const CyclicFromGenerator& f) const { return cyclic_code_from_gen(f.n, f.generator); }
    LinearCode operator()(const ExplicitCode& f) const { return f.code; }
  };
  return std::visit(Builder{}, source);
}

std::string describe(const CodeSource& source) {
  struct Describer {
    std::string operator()(const C0Family& f) const {
      return "c0 " + std::to_string(f.a) + " " + std::to_string(f.b);
    }
    std::string operator()(const C1Family& f) const {
      return "c1 " + std::to_string(f.a) + " " + std::to_string(f.b);
    }
    std::string operator()(const KFamily& f) const { return "k " + f.shape.to_string(); }
    std::string operator()(const ElementaryFamily& f) const {
      return "elementary " + std::to_string(static_cast<int>(f.kind)) + " " + std::to_string(f.n);
    }
    std::string operator()(const HammingFamily& f) const { return "hamming " + std::to_string(f.r); }
    std::string operator()(const GolayFamily&) const { return "golay"; }
    std::string operator()(const CyclicFromGenerator& f) const {
      return "cyclic " + std::to_string(f.n) + " " + f.generator.to_string();
    }
    std::string operator()(const ExplicitCode& f) const { return f.label; }
  };
  return std::visit(Describer{}, source);
}

}  // namespace codeaut
