#include "unigraph/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "unigraph/error.hpp"

namespace unigraph {

namespace {

constexpr int kGroupOrderCap = 5040;

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InputError("cannot read " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw InputError("cannot read " + what + " from '" + text + "'");
  if (v > (1LL << 30) || v < -(1LL << 30)) throw InputError(what + " out of range: " + text);
  return static_cast<int>(v);
}

void check_order(long long order) {
  if (order > kGroupOrderCap)
    throw CapacityError("group order " + std::to_string(order) + " exceeds cap " + std::to_string(kGroupOrderCap));
}

// Rank of a permutation of 0..n-1 in lexicographic order.
int lehmer_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

bool is_prime_power(int m) {
  if (m < 2) return false;
  int p = 2;
  while (m % p) ++p;
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  check_order(n);
  FiniteGroup g;
  g.source_ = GroupSource::Cyclic;
  g.order_ = n;
  g.params_ = {n};
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::product(const std::vector<int>& moduli) {
  if (moduli.empty()) throw InputError("product of zero factors");
  long long order = 1;
  for (int m : moduli) {
    if (m < 1) throw InputError("factor order must be positive");
    order *= m;
    check_order(order);
  }
  FiniteGroup g;
  g.source_ = GroupSource::Product;
  g.order_ = static_cast<int>(order);
  g.params_ = moduli;
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  check_order(2LL * n);
  FiniteGroup g;
  g.source_ = GroupSource::Dihedral;
  g.order_ = 2 * n;
  g.params_ = {n};
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw InputError("symmetric degree must be positive");
  if (n > kSymmetricDegreeCap)
    throw CapacityError("symmetric groups capped at degree " + std::to_string(kSymmetricDegreeCap));
  FiniteGroup g;
  g.source_ = GroupSource::Symmetric;
  g.params_ = {n};
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do g.perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  g.order_ = static_cast<int>(g.perms_.size());
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw ValidationError("empty multiplication table");
  check_order(n);
  FiniteGroup g;
  g.source_ = GroupSource::Table;
  g.order_ = n;
  g.params_ = {n};
  g.table_.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw ValidationError("table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n)
        throw ValidationError("closure fails: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                              std::to_string(c));
      g.table_.push_back(c);
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw ValidationError("no identity element");
  g.identity_ = e;
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = g.mul(a, b) == e && g.mul(b, a) == e;
    if (!found) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("associativity fails for (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  if (source_ == GroupSource::Table) {
    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_ && inverse_[a] < 0; ++b)
        if (mul(a, b) == identity_) inverse_[a] = b;
    return;
  }
  identity_ = 0;
  inverse_.resize(order_);
  for (int a = 0; a < order_; ++a) {
    switch (source_) {
      case GroupSource::Cyclic:
        inverse_[a] = (order_ - a) % order_;
        break;
      case GroupSource::Product: {
        int x = 0;
        int stride = 1;
        for (int i = static_cast<int>(params_.size()) - 1; i >= 0; --i) {
          const int m = params_[i];
          x += ((m - (a / stride) % m) % m) * stride;
          stride *= m;
        }
        inverse_[a] = x;
        break;
      }
      case GroupSource::Dihedral: {
        const int n = params_[0];
        inverse_[a] = a < n ? (n - a) % n : a;
        break;
      }
      case GroupSource::Symmetric: {
        const auto& p = perms_[a];
        std::vector<int> q(p.size());
        for (std::size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
        inverse_[a] = lehmer_rank(q);
        break;
      }
      case GroupSource::Table:
        break;
    }
  }
  // Small groups get a lookup table; larger ones compose on demand.
  if (order_ <= 1024) {
    std::vector<int> table(static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b) table[static_cast<std::size_t>(a) * order_ + b] = compose(a, b);
    table_ = std::move(table);
  }
}

// ---------------------------------------------------------------------------
// Arithmetic

// Closed-form product for the built-in families. Symmetric: (ab)(x) = a(b(x)).
int FiniteGroup::compose(int a, int b) const {
  switch (source_) {
    case GroupSource::Cyclic:
      return (a + b) % order_;
    case GroupSource::Dihedral: {
      const int n = params_[0];
      const int ra = a % n, sa = a / n, rb = b % n, sb = b / n;
      return mod(ra + (sa ? -rb : rb), n) + n * ((sa + sb) % 2);
    }
    case GroupSource::Product: {
      int c = 0;
      int stride = 1;
      for (int i = static_cast<int>(params_.size()) - 1; i >= 0; --i) {
        const int m = params_[i];
        c += (((a / stride) % m + (b / stride) % m) % m) * stride;
        stride *= m;
      }
      return c;
    }
    case GroupSource::Symmetric: {
      const auto& pa = perms_[a];
      const auto& pb = perms_[b];
      std::vector<int> c(pa.size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = pa[pb[x]];
      return lehmer_rank(c);
    }
    case GroupSource::Table:
      break;
  }
  return table_[static_cast<std::size_t>(a) * order_ + b];
}

int FiniteGroup::power(int a, int k) const {
  int r = identity_;
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  if (source_ == GroupSource::Cyclic || source_ == GroupSource::Product) return true;
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& elements) const {
  std::vector<char> in(order_, 0);
  std::deque<int> queue{identity_};
  in[identity_] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s : elements) {
      const int y = mul(s, x);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < order_; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

std::vector<int> FiniteGroup::components(int a) const {
  if (source_ != GroupSource::Cyclic && source_ != GroupSource::Product)
    throw InputError("components are defined for cyclic and product groups only");
  std::vector<int> c(params_.size());
  for (int i = static_cast<int>(params_.size()) - 1; i >= 0; --i) {
    c[i] = a % params_[i];
    a /= params_[i];
  }
  return c;
}

// ---------------------------------------------------------------------------
// Element notation

std::string FiniteGroup::name(int a) const {
  switch (source_) {
    case GroupSource::Cyclic:
    case GroupSource::Table:
      return std::to_string(a);
    case GroupSource::Product: {
      std::string s = "[";
      const auto c = components(a);
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
      return s + "]";
    }
    case GroupSource::Dihedral: {
      const int n = params_[0];
      const int r = a % n, sb = a / n;
      if (r == 0 && sb == 0) return "e";
      std::string s;
      if (r == 1) s = "r";
      if (r > 1) s = "r^" + std::to_string(r);
      if (sb) s += s.empty() ? "s" : " s";
      return s;
    }
    case GroupSource::Symmetric: {
      const auto& p = perms_[a];
      std::string s;
      std::vector<char> seen(p.size(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        for (std::size_t j = i; !seen[j]; j = p[j]) {
          seen[j] = 1;
          if (j != i) s += " ";
          s += std::to_string(j + 1);
        }
        s += ")";
      }
      return s.empty() ? "e" : s;
    }
  }
  return std::to_string(a);
}

int FiniteGroup::parse_element(const std::string& raw) const {
  const std::string text = trim(raw);
  if (text.empty()) throw InputError("empty group element");
  if (text[0] == '#') {
    const int k = parse_int(text.substr(1), "element index");
    if (k < 0 || k >= order_) throw InputError("element index " + text + " out of range");
    return k;
  }
  switch (source_) {
    case GroupSource::Cyclic:
      return mod(parse_int(text, "residue"), order_);
    case GroupSource::Table: {
      const int k = parse_int(text, "element index");
      if (k < 0 || k >= order_) throw InputError("element index " + text + " out of range");
      return k;
    }
    case GroupSource::Product: {
      if (text.front() != '[' || text.back() != ']') throw InputError("product elements are written [a b ...]");
      std::istringstream in(text.substr(1, text.size() - 2));
      std::vector<int> c;
      std::string tok;
      while (in >> tok) c.push_back(parse_int(tok, "component"));
      if (c.size() != params_.size()) throw InputError("wrong number of components in " + text);
      int a = 0;
      for (std::size_t i = 0; i < c.size(); ++i) a = a * params_[i] + mod(c[i], params_[i]);
      return a;
    }
    case GroupSource::Dihedral: {
      const std::string key = strip_spaces(text);
      if (key == "s1") return parse_element("r");
      if (key == "s2") return parse_element("s");
      for (int a = 0; a < order_; ++a)
        if (strip_spaces(name(a)) == key) return a;
      throw InputError("unknown dihedral element '" + text + "'");
    }
    case GroupSource::Symmetric: {
      const int n = params_[0];
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      if (text == "e" || text == "()") return lehmer_rank(p);
      // Cycles compose right to left.
      std::vector<std::vector<int>> cycles;
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
          continue;
        }
        if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
        const auto close = text.find(')', pos);
        if (close == std::string::npos) throw InputError("unbalanced cycle notation: " + text);
        std::istringstream in(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        std::string tok;
        while (in >> tok) {
          const int x = parse_int(tok, "point");
          if (x < 1 || x > n) throw InputError("point " + tok + " outside 1.." + std::to_string(n));
          cyc.push_back(x - 1);
        }
        if (std::set<int>(cyc.begin(), cyc.end()).size() != cyc.size())
          throw InputError("repeated point in cycle " + text);
        cycles.push_back(std::move(cyc));
        pos = close + 1;
      }
      for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<int> c(n);
        std::iota(c.begin(), c.end(), 0);
        for (std::size_t i = 0; i < it->size(); ++i) c[(*it)[i]] = (*it)[(i + 1) % it->size()];
        for (int x = 0; x < n; ++x) p[x] = c[p[x]];
      }
      return lehmer_rank(p);
    }
  }
  throw InputError("cannot parse element " + text);
}

// ---------------------------------------------------------------------------

FiniteGroup build_group(const std::string& raw) {
  const std::string spec = trim(raw);
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  if (starts("Z2^")) return FiniteGroup::product(std::vector<int>(parse_int(spec.substr(3), "exponent"), 2));
  if (starts("Z:")) return FiniteGroup::cyclic(parse_int(spec.substr(2), "cyclic order"));
  if (starts("D:")) return FiniteGroup::dihedral(parse_int(spec.substr(2), "dihedral parameter"));
  if (starts("S:")) return FiniteGroup::symmetric(parse_int(spec.substr(2), "symmetric degree"));
  if (starts("prod:")) {
    std::vector<int> moduli;
    std::istringstream in(spec.substr(5));
    std::string part;
    while (std::getline(in, part, ',')) {
      part = trim(part);
      if (part.rfind("Z:", 0) != 0) throw InputError("product factors are written Z:m, got '" + part + "'");
      moduli.push_back(parse_int(part.substr(2), "factor order"));
    }
    return FiniteGroup::product(moduli);
  }
  if (starts("table:")) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open group table " + path);
    nlohmann::json j;
    try {
      in >> j;
      const int order = j.at("order").get<int>();
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(table.size()) != order) throw ValidationError("table has wrong number of rows");
      return FiniteGroup::from_table(std::move(table));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("malformed group table " + path + ": " + e.what());
    }
  }
  throw InputError("unknown group spec '" + spec + "'");
}

GenSet make_genset(const FiniteGroup& g, std::vector<int> elements, bool allow_identity) {
  if (elements.empty()) throw InputError("generating set is empty");
  std::set<int> seen;
  for (int s : elements) {
    if (s < 0 || s >= g.order()) throw InputError("element index out of range");
    if (!seen.insert(s).second) throw InputError("repeated element " + g.name(s));
    if (s == g.identity() && !allow_identity) throw InputError("identity in generating set");
  }
  return {std::move(elements)};
}

GenSet parse_genset(const FiniteGroup& g, const std::string& list, bool allow_identity) {
  std::vector<int> elements;
  std::istringstream in(list);
  std::string part;
  while (std::getline(in, part, ',')) elements.push_back(g.parse_element(part));
  return make_genset(g, std::move(elements), allow_identity);
}

Digraph cayley_digraph(const FiniteGroup& g, const GenSet& s) {
  Digraph d(g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int t : s.elements) d.set_arc(x, g.mul(t, x));
  return d;
}

Permutation regular_representation(const FiniteGroup& g, int s) {
  std::vector<int> image(g.order());
  for (int x = 0; x < g.order(); ++x) image[x] = g.mul(s, x);
  return Permutation(std::move(image));
}

GenSet theorem1_generating_set(const FiniteGroup& g, int s1, int s2) {
  const auto span = g.generated({s1, s2});
  if (static_cast<int>(span.size()) != g.order())
    throw InputError("{" + g.name(s1) + ", " + g.name(s2) + "} generates a subgroup of order " +
                     std::to_string(span.size()) + ", not " + std::to_string(g.order()));
  const int c = g.mul(g.inverse(s1), s2);
  std::vector<int> t;
  for (int x = g.identity(), k = 0; k == 0 || x != g.identity(); x = g.mul(x, c), ++k)
    t.push_back(g.mul(s1, x));
  return {std::move(t)};
}

std::optional<LineWitness> mansilla_serra_check(const FiniteGroup& g, const GenSet& s) {
  for (int y : s.elements) {
    const int x = g.inverse(y);
    std::vector<int> h;
    for (int t : s.elements) h.push_back(g.mul(x, t));
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (h.size() != s.elements.size()) continue;
    bool closed = true;
    for (int a : h)
      for (int b : h)
        if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) closed = false;
    if (closed) return LineWitness{x, std::move(h)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Unistochastic conditions

ConditionList unistochastic_group_conditions(const FiniteGroup& g, const GenSet& s) {
  ConditionList out;
  const auto& el = s.elements;

  {
    Condition c{"involutive_differences", Status::Pass, {}, "s t^-1 = t s^-1 for all s, t in S"};
    for (std::size_t i = 0; i < el.size() && c.witness.empty(); ++i)
      for (std::size_t j = i + 1; j < el.size(); ++j)
        if (g.mul(el[i], g.inverse(el[j])) != g.mul(el[j], g.inverse(el[i]))) {
          c.status = Status::Fail;
          c.witness = {el[i], el[j]};
          c.detail = "fails for s=" + g.name(el[i]) + ", t=" + g.name(el[j]);
          break;
        }
    out.push_back(std::move(c));
  }

  out.push_back({"even_order", g.order() % 2 == 0 ? Status::Pass : Status::Fail, {g.order()},
                 "|G| = " + std::to_string(g.order())});

  {
    Condition c{"abelian_equal_squares", Status::NotApplicable, {}, "G is not abelian"};
    if (g.is_abelian()) {
      c.status = Status::Pass;
      c.detail = "s^2 = t^2 for all s, t in S";
      for (std::size_t j = 1; j < el.size(); ++j)
        if (g.mul(el[0], el[0]) != g.mul(el[j], el[j])) {
          c.status = Status::Fail;
          c.witness = {el[0], el[j]};
          c.detail = "2s != 2t for s=" + g.name(el[0]) + ", t=" + g.name(el[j]);
          break;
        }
    }
    out.push_back(std::move(c));
  }

  if (g.source() == GroupSource::Cyclic) {
    const int n = g.order();
    Condition pair{"cyclic_pair_form", Status::Fail, {}, ""};
    bool pair_ok = false;
    int sv = 0, tv = 0;
    if (el.size() != 2) {
      pair.detail = "|S| = " + std::to_string(el.size()) + ", need 2";
    } else {
      sv = std::min(el[0], el[1]);
      tv = std::max(el[0], el[1]);
      pair.witness = {sv, tv};
      pair_ok = n % 2 == 0 && tv == sv + n / 2;
      pair.status = pair_ok ? Status::Pass : Status::Fail;
      pair.detail = pair_ok ? "t = s + n/2" : "t != s + n/2 (mod n)";
    }
    out.push_back(pair);

    Condition gen{"cyclic_generation", Status::NotApplicable, {}, "needs S = {s, s+n/2}"};
    Condition graph{"cyclic_graph_iff_quarter", Status::NotApplicable, {}, "needs S = {s, s+n/2}"};
    Condition ham{"cyclic_hamiltonian", Status::NotApplicable, {}, "needs S = {s, s+n/2}"};
    Condition nonham{"cyclic_graph_not_hamiltonian", Status::NotApplicable, {}, "needs S = {s, s+n/2}"};
    if (pair_ok) {
      const bool predicted = sv % 2 == 1 || (n % 4 == 2);
      const bool generates = static_cast<int>(g.generated(el).size()) == n;
      gen.status = predicted ? Status::Pass : Status::Fail;
      gen.witness = {sv, tv};
      gen.detail = predicted ? "s odd or n = 4m+2" : "s and t both even with n/2 even";
      if (predicted != generates) gen.detail += " (closure disagrees)";

      const bool symmetric = mod(-sv, n) == tv;
      const bool quarter = n % 4 == 0 && sv == n / 4;
      graph.status = symmetric == quarter ? Status::Pass : Status::Fail;
      graph.witness = {sv};
      graph.detail = symmetric ? "X is a graph and s = n/4" : "X is not a graph and s != n/4";

      if (generates) {
        const int odd = sv % 2 ? sv : tv;
        ham.status = Status::Pass;
        for (int k = 0; k < n; ++k) ham.witness.push_back(mod(static_cast<long long>(k) * odd, n));
        ham.detail = "cycle e, s, 2s, ... with s = " + std::to_string(odd);
      } else {
        ham.detail = "S does not generate Z_n";
      }
      if (symmetric && generates) {
        const auto cyc = hamiltonian_cycle(cayley_digraph(g, s), n);
        nonham.status = cyc ? Status::Fail : Status::Pass;
      } else {
        nonham.detail = "not both a graph and generating";
      }
    }
    out.push_back(gen);
    out.push_back(graph);
    out.push_back(ham);
    out.push_back(nonham);
  }

  {
    Condition equal{"abelian_odd_components_equal", Status::NotApplicable, {}, "needs a prime-power product"};
    Condition single{"abelian_all_odd_singleton", Status::NotApplicable, {}, "needs all factors odd"};
    const bool canonical = (g.source() == GroupSource::Cyclic || g.source() == GroupSource::Product) &&
                           std::all_of(g.parameters().begin(), g.parameters().end(), is_prime_power);
    if (canonical) {
      const auto& moduli = g.parameters();
      bool any_odd = false, all_odd = true;
      equal.status = Status::Pass;
      equal.detail = "odd components agree across S";
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] % 2 == 0) {
          all_odd = false;
          continue;
        }
        any_odd = true;
        const int first = g.components(el[0])[i];
        for (int x : el)
          if (g.components(x)[i] != first && equal.status == Status::Pass) {
            equal.status = Status::Fail;
            equal.witness = {static_cast<int>(i), el[0], x};
            equal.detail = "component " + std::to_string(i) + " differs between " + g.name(el[0]) + " and " + g.name(x);
          }
      }
      if (!any_odd) {
        equal.status = Status::NotApplicable;
        equal.detail = "no odd factor";
      }
      if (all_odd) {
        single.status = el.size() == 1 ? Status::Pass : Status::Fail;
        single.witness = {static_cast<int>(el.size())};
        single.detail = "|S| = " + std::to_string(el.size());
      }
    }
    out.push_back(equal);
    out.push_back(single);
  }

  {
    std::vector<Permutation> reps;
    for (int x : el) reps.push_back(regular_representation(g, x));
    Condition c{"pairwise_complementary", Status::Pass, {}, "regular representations pairwise complementary"};
    if (auto bad = pairwise_complementary(reps)) {
      c.status = Status::Fail;
      c.witness = {el[bad->first], el[bad->second]};
      c.detail = g.name(el[bad->first]) + " and " + g.name(el[bad->second]) + " are not complementary";
    }
    out.push_back(std::move(c));
  }
  return out;
}

Digraph arrangement_digraph(int n, int k) {
  if (k < 1 || k >= n) throw InputError("P(n,k) needs 1 <= k <= n-1");
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      tuples.push_back(cur);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      cur.push_back(x);
      self(self);
      cur.pop_back();
      used[x] = 0;
    }
  };
  rec(rec);
  check_order(static_cast<long long>(tuples.size()));
  const int m = static_cast<int>(tuples.size());
  Digraph d(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto& u = tuples[a];
      const auto& v = tuples[b];
      if (!std::equal(u.begin() + 1, u.end(), v.begin())) continue;
      if (std::find(u.begin(), u.end(), v.back()) == u.end()) d.set_arc(a, b);
    }
  return d;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace unigraph
