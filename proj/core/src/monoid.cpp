#include "tlk/monoid.hpp"

#include <numeric>
#include <random>
#include <unordered_map>

#include "tlk/errors.hpp"

namespace tlk {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root, so roots are lexicographically least.
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
  }
};

// Words of a fixed length in base k, first letter most significant, so the
// numeric order is the lexicographic order.
Word decode(std::size_t code, std::size_t k, std::size_t len) {
  Word w(len);
  for (std::size_t p = len; p-- > 0;) {
    w[p] = static_cast<int>(code % k);
    code /= k;
  }
  return w;
}

std::size_t encode(const Word& w, std::size_t k) {
  std::size_t code = 0;
  for (int x : w) code = code * k + static_cast<std::size_t>(x);
  return code;
}

std::size_t word_count(std::size_t k, std::size_t len, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t p = 0; p < len; ++p) {
    if (k != 0 && n > cap / k) throw BudgetExceeded("more than " + std::to_string(cap) + " words of length " +
                                                    std::to_string(len));
    n *= k;
  }
  if (n > cap) throw BudgetExceeded("more than " + std::to_string(cap) + " words of length " + std::to_string(len));
  return n;
}

}  // namespace

std::vector<MonoidElement> classes_of_length(const CoxeterMatrix& q, std::size_t len, std::size_t word_cap) {
  const std::size_t k = q.size();
  if (len == 0) return {MonoidElement{{}, {Word{}}}};
  if (k == 0) return {};
  const std::size_t n = word_count(k, len, word_cap);

  UnionFind uf(n);
  for (std::size_t code = 0; code < n; ++code) {
    const Word w = decode(code, k, len);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const int m = q(i, j);
        if (i == j || m == kInfinity || static_cast<std::size_t>(m) > len) continue;
        for (std::size_t p = 0; p + m <= len; ++p) {
          bool match = true;
          for (int t = 0; t < m && match; ++t) match = w[p + t] == static_cast<int>(t % 2 ? j : i);
          if (!match) continue;
          Word v = w;
          for (int t = 0; t < m; ++t) v[p + t] = static_cast<int>(t % 2 ? i : j);
          uf.unite(code, encode(v, k));
        }
      }
  }

  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<MonoidElement> out;
  for (std::size_t code = 0; code < n; ++code) {
    const std::size_t root = uf.find(code);
    auto [it, fresh] = slot.emplace(root, out.size());
    if (fresh) out.push_back({decode(root, k, len), {}});
    out[it->second].words.push_back(decode(code, k, len));
  }
  return out;
}

std::vector<std::vector<MonoidElement>> enumerate(const CoxeterMatrix& q, std::size_t max_len, std::size_t word_cap) {
  std::vector<std::vector<MonoidElement>> out;
  std::size_t spent = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    spent += word_count(q.size(), len, word_cap);
    if (spent > word_cap) throw BudgetExceeded("word enumeration exceeds the cap of " + std::to_string(word_cap));
    out.push_back(classes_of_length(q, len, word_cap));
  }
  return out;
}

FaithfulnessReport faithfulness_spotcheck(const TwistedContext& ctx, std::size_t max_len, std::size_t word_cap) {
  const auto levels = enumerate(ctx.quotient(), max_len, word_cap);
  const std::size_t k = ctx.generators().size();
  FaithfulnessReport rep;

  // Images of every word, level by level: ψ(w·s) = ψ(w)ψ_s.
  std::vector<std::vector<Matrix>> images(levels.size());
  images[0].push_back(Matrix::identity(ctx.dimension()));
  for (std::size_t len = 1; len < levels.size(); ++len) {
    const auto& prev = images[len - 1];
    images[len].reserve(prev.size() * k);
    for (const auto& p : prev)
      for (std::size_t s = 0; s < k; ++s) images[len].push_back(p * ctx.generator(s).psi);
  }

  struct Seen {
    std::size_t len, code;
    const Word* rep;
  };
  std::unordered_map<std::size_t, std::vector<Seen>> by_hash;
  for (std::size_t len = 0; len < levels.size(); ++len) {
    std::size_t words = 0;
    for (const auto& cls : levels[len]) {
      words += cls.words.size();
      const std::size_t code = encode(cls.representative, k);
      const Matrix& img = images[len][code];
      for (const auto& w : cls.words)
        if (w != cls.representative && !(images[len][encode(w, k)] == img))
          rep.inconsistencies.push_back({cls.representative, w});
      auto& bucket = by_hash[img.hash()];
      for (const auto& s : bucket)
        if (images[s.len][s.code] == img) rep.collisions.push_back({*s.rep, cls.representative});
      bucket.push_back({len, code, &cls.representative});
    }
    rep.levels.push_back({len, words, levels[len].size()});
  }
  return rep;
}

MultiplicativityReport multiplicativity_check(const TwistedContext& ctx, std::size_t max_len, std::size_t samples,
                                              std::uint64_t seed) {
  MultiplicativityReport rep;
  const int k = static_cast<int>(ctx.generators().size());
  if (k == 0 || max_len == 0) return rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> total(0, max_len);
  std::uniform_int_distribution<int> letter(0, k - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = total(rng);
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    Word g(cut), h(n - cut);
    for (auto& x : g) x = letter(rng);
    for (auto& x : h) x = letter(rng);
    Word gh = g;
    gh.insert(gh.end(), h.begin(), h.end());
    ++rep.samples;
    if (!(ctx.image_of_word(gh) == ctx.image_of_word(g) * ctx.image_of_word(h))) rep.failures.push_back({g, h});
  }
  return rep;
}

std::string word_string(const CoxeterMatrix& q, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t p = 0; p < w.size(); ++p) s += (p ? " " : "") + q.label(static_cast<std::size_t>(w[p]));
  return s;
}

}  // namespace tlk
