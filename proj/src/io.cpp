#include "algroup/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace algroup {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
  }
}

Field field_for_order(long long q, const std::string& what) {
  if (q < 2) throw std::invalid_argument(what + ": field order must be >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument(what + ": " + std::to_string(q) + " is not a prime power");
  return Field::make(p, e);
}

}  // namespace

bool looks_like_builtin(const std::string& spec) {
  return spec.rfind("u:", 0) == 0 || spec.rfind("trunc:", 0) == 0 ||
         spec.rfind("pattern:", 0) == 0;
}

Algebra parse_builtin(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts[0] == "u") {
    if (parts.size() != 3) throw std::invalid_argument("builtin u: expected u:n:q");
    long long n = parse_int(parts[1], "u: matrix size");
    long long q = parse_int(parts[2], "u: field order");
    return Algebra::upper_triangular(field_for_order(q, "u"), static_cast<int>(n));
  }
  if (parts[0] == "trunc") {
    if (parts.size() != 3) throw std::invalid_argument("builtin trunc: expected trunc:q:m");
    long long q = parse_int(parts[1], "trunc: field order");
    long long m = parse_int(parts[2], "trunc: power");
    return Algebra::truncated_polynomial(field_for_order(q, "trunc"), static_cast<int>(m));
  }
  if (parts[0] == "pattern") {
    if (parts.size() != 3)
      throw std::invalid_argument("builtin pattern: expected pattern:q:i-j,k-l,...");
    long long q = parse_int(parts[1], "pattern: field order");
    std::vector<std::pair<int, int>> positions;
    int matrix_size = 0;
    for (const auto& pair_str : split(parts[2], ',')) {
      auto ij = split(pair_str, '-');
      if (ij.size() != 2)
        throw std::invalid_argument("pattern: malformed position '" + pair_str + "'");
      int i = static_cast<int>(parse_int(ij[0], "pattern: row"));
      int j = static_cast<int>(parse_int(ij[1], "pattern: column"));
      positions.emplace_back(i, j);
      matrix_size = std::max(matrix_size, j);
    }
    return Algebra::pattern(field_for_order(q, "pattern"), matrix_size, std::move(positions));
  }
  throw std::invalid_argument("unknown builtin '" + spec + "'");
}

Algebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open");

  int p = 0, e = 1, dim = -1;
  std::vector<int> modulus;
  std::string name;
  struct Product {
    int line;
    int i, j;
    std::vector<std::pair<int, long long>> terms;
  };
  std::vector<Product> products;

  auto fail = [&](int line, const std::string& msg) -> void {
    throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + msg);
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (tokens[0] == "p") {
      if (tokens.size() != 2) fail(line_no, "expected: p <prime>");
      p = static_cast<int>(parse_int(tokens[1], "p"));
    } else if (tokens[0] == "e") {
      if (tokens.size() != 2) fail(line_no, "expected: e <degree>");
      e = static_cast<int>(parse_int(tokens[1], "e"));
    } else if (tokens[0] == "modulus") {
      modulus.clear();
      for (std::size_t k = 1; k < tokens.size(); ++k)
        modulus.push_back(static_cast<int>(parse_int(tokens[k], "modulus coefficient")));
    } else if (tokens[0] == "dim") {
      if (tokens.size() != 2) fail(line_no, "expected: dim <n>");
      dim = static_cast<int>(parse_int(tokens[1], "dim"));
    } else if (tokens[0] == "name") {
      std::size_t at = raw.find("name");
      name = raw.substr(at + 4);
      while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.erase(0, 1);
      while (!name.empty() && (name.back() == ' ' || name.back() == '\r')) name.pop_back();
    } else {
      // product line: i j -> k:c k:c ...
      auto arrow = std::find(tokens.begin(), tokens.end(), "->");
      if (arrow == tokens.end() || arrow - tokens.begin() != 2)
        fail(line_no, "expected a directive or a product line 'i j -> k:c ...'");
      Product prod;
      prod.line = line_no;
      prod.i = static_cast<int>(parse_int(tokens[0], "product row index"));
      prod.j = static_cast<int>(parse_int(tokens[1], "product column index"));
      for (auto it = arrow + 1; it != tokens.end(); ++it) {
        auto kc = split(*it, ':');
        if (kc.size() != 2) fail(line_no, "malformed term '" + *it + "', expected k:c");
        prod.terms.emplace_back(static_cast<int>(parse_int(kc[0], "term index")),
                                parse_int(kc[1], "term coefficient"));
      }
      products.push_back(std::move(prod));
    }
  }

  if (p == 0) fail(line_no, "missing field directive 'p'");
  if (dim < 1) fail(line_no, "missing or invalid 'dim'");

  Field field{FieldSpec{p, e, modulus}};
  std::vector<std::vector<FqVec>> table(dim, std::vector<FqVec>(dim, FqVec(dim, 0)));
  for (const auto& prod : products) {
    if (prod.i < 1 || prod.i > dim || prod.j < 1 || prod.j > dim)
      fail(prod.line, "product indices out of range [1, " + std::to_string(dim) + "]");
    FqVec& cell = table[prod.i - 1][prod.j - 1];
    cell.assign(dim, 0);
    for (auto [k, c] : prod.terms) {
      if (k < 1 || k > dim)
        fail(prod.line, "term index out of range [1, " + std::to_string(dim) + "]");
      try {
        cell[k - 1] = field.of_packed(c);
      } catch (const std::exception& ex) {
        fail(prod.line, ex.what());
      }
    }
  }

  if (name.empty()) {
    std::size_t slash = path.find_last_of('/');
    name = slash == std::string::npos ? path : path.substr(slash + 1);
  }
  try {
    return Algebra(field, dim, std::move(table), name);
  } catch (const std::exception& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
}

Algebra load_algebra(const std::string& arg) {
  if (looks_like_builtin(arg)) return parse_builtin(arg);
  return parse_algebra_file(arg);
}

}  // namespace algroup
