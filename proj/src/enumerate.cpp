#include "fleck/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "fleck/json_io.hpp"
#include "fleck/parallel.hpp"

namespace fleck {

namespace {

// Minimal relabeling of the order table alone; lattice-level dedup.
std::vector<std::uint8_t> lattice_form(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint8_t> best, cand(n * n);
  do {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        cand[p[x] * n + p[y]] = lat.leq(x, y) ? 1 : 0;
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Depth-first fill of one commutative product table with a fixed unit.
// The unit row and the absorbing bottom row are forced up front (both are
// residuation consequences, so skipping their violations loses nothing);
// every free cell is pruned by monotonicity against all assigned cells and
// by the associativity instances already determined.
class MonoidDfs {
 public:
  MonoidDfs(const FiniteLattice& lat, Elem unit, std::vector<FleAlgebra>& out)
      : lat_(lat), n_(lat.size()), unit_(unit), out_(out), table_(n_ * n_, -1) {}

  void run() {
    const Elem bot = lat_.bottom();
    for (Elem x = 0; x < n_; ++x)
      if (!force(unit_, x, x) || !force(bot, x, bot)) return;
    for (Elem i = 0; i < n_; ++i)
      for (Elem j = i; j < n_; ++j)
        if (table_[i * n_ + j] < 0) cells_.emplace_back(i, j);
    descend(0);
  }

 private:
  bool force(Elem i, Elem j, Elem v) {
    Elem& a = table_[i * n_ + j];
    Elem& b = table_[j * n_ + i];
    if ((a >= 0 && a != v) || (b >= 0 && b != v)) return false;
    a = b = v;
    return true;
  }

  bool monotone_with(Elem i, Elem j, Elem v) const {
    for (Elem k = 0; k < n_; ++k)
      for (Elem l = 0; l < n_; ++l) {
        const Elem w = table_[k * n_ + l];
        if (w < 0) continue;
        if (lat_.leq(k, i) && lat_.leq(l, j) && !lat_.leq(w, v)) return false;
        if (lat_.leq(i, k) && lat_.leq(j, l) && !lat_.leq(v, w)) return false;
      }
    return true;
  }

  bool assoc_at(Elem a, Elem b, Elem c) const {
    const Elem ab = table_[a * n_ + b];
    const Elem bc = table_[b * n_ + c];
    if (ab < 0 || bc < 0) return true;
    const Elem l = table_[ab * n_ + c];
    const Elem r = table_[a * n_ + bc];
    return l < 0 || r < 0 || l == r;
  }

  bool assoc_involving(Elem i, Elem j) const {
    for (Elem z = 0; z < n_; ++z)
      if (!assoc_at(i, j, z) || !assoc_at(i, z, j) || !assoc_at(z, i, j) ||
          !assoc_at(j, i, z) || !assoc_at(j, z, i) || !assoc_at(z, j, i))
        return false;
    return true;
  }

  void descend(std::size_t k) {
    if (k == cells_.size()) {
      emit();
      return;
    }
    const auto [i, j] = cells_[k];
    for (Elem v = 0; v < n_; ++v) {
      if (!monotone_with(i, j, v)) continue;
      table_[i * n_ + j] = table_[j * n_ + i] = v;
      if (assoc_involving(i, j)) descend(k + 1);
      table_[i * n_ + j] = table_[j * n_ + i] = -1;
    }
  }

  void emit() {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          if (table_[table_[a * n_ + b] * n_ + c] !=
              table_[a * n_ + table_[b * n_ + c]])
            return;
    if (!residual_from_product(lat_, table_).ok) return;
    for (Elem z = 0; z < n_; ++z) {
      BuildResult br = build_algebra(lat_, table_, unit_, z);
      if (!br.algebra)
        throw Error("internal defect: enumerated table fails validation: " +
                    br.report.rule);
      out_.push_back(*std::move(br.algebra));
    }
  }

  const FiniteLattice& lat_;
  int n_;
  Elem unit_;
  std::vector<FleAlgebra>& out_;
  std::vector<Elem> table_;
  std::vector<std::pair<Elem, Elem>> cells_;
};

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int n) {
  if (n < 1) throw PreconditionError("lattice size must be at least 1");
  if (n > 8) throw PreconditionError("lattice enumeration capped at size 8");

  // Only pairs i < j may be related: indices follow a linear extension, which
  // every finite lattice admits, so no isomorphism class is lost.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);

  std::vector<FiniteLattice> out;
  std::set<std::vector<std::uint8_t>> seen;
  const std::uint64_t total = 1ull << cells.size();
  std::vector<std::uint8_t> leq(n * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(leq.begin(), leq.end(), 0);
    for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (mask >> b & 1) leq[cells[b].first * n + cells[b].second] = 1;
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = x + 1; y < n && transitive; ++y) {
        if (!leq[x * n + y]) continue;
        for (int z = y + 1; z < n; ++z)
          if (leq[y * n + z] && !leq[x * n + z]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    std::optional<FiniteLattice> lat = FiniteLattice::try_from_leq(n, leq);
    if (!lat) continue;
    if (seen.insert(lattice_form(*lat)).second) out.push_back(std::move(*lat));
  }
  return out;
}

std::vector<FleAlgebra> extend_to_fle(const FiniteLattice& lat) {
  std::vector<FleAlgebra> out;
  for (Elem unit = 0; unit < lat.size(); ++unit)
    MonoidDfs(lat, unit, out).run();
  return out;
}

EnumerationReport enumerate_fle(int n, int threads, int size_cap) {
  if (n < 1) throw PreconditionError("size must be at least 1");
  if (n > size_cap)
    throw PreconditionError("size cap exceeded: " + std::to_string(n) + " > " +
                            std::to_string(size_cap));
  const auto t0 = std::chrono::steady_clock::now();

  const std::vector<FiniteLattice> lats = enumerate_lattices(n);
  std::vector<std::vector<FleAlgebra>> per(lats.size());
  parallel_for(lats.size(), threads,
               [&](std::size_t i) { per[i] = extend_to_fle(lats[i]); });

  std::vector<FleAlgebra> raw;
  for (auto& list : per)
    for (auto& a : list) raw.push_back(std::move(a));

  std::vector<CanonicalForm> fle_forms(raw.size()), crl_forms(raw.size());
  parallel_for(raw.size(), threads, [&](std::size_t i) {
    fle_forms[i] = canonicalize(raw[i]);
    crl_forms[i] = canonicalize_crl(raw[i]);
  });

  const std::set<CanonicalForm> fle_set(fle_forms.begin(), fle_forms.end());
  const std::set<CanonicalForm> crl_set(crl_forms.begin(), crl_forms.end());

  EnumerationReport rep;
  SizeCounts& sc = rep.by_size[n];
  sc.lattices = static_cast<int>(lats.size());
  sc.crls = static_cast<int>(crl_set.size());
  sc.fle = static_cast<int>(fle_set.size());

  std::set<std::string> hashes;
  for (const CanonicalForm& f : fle_set) {
    CorpusEntry e{algebra_from_form(f), f, canonical_hash_hex(f)};
    if (!hashes.insert(e.hash).second)
      throw Error("internal defect: canonical hash collision " + e.hash);
    rep.corpus.entries.push_back(std::move(e));
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

EnumerationReport enumerate_fle_up_to(int max_size, int threads,
                                      int size_cap) {
  if (max_size < 1) throw PreconditionError("size must be at least 1");
  EnumerationReport rep;
  for (int n = 1; n <= max_size; ++n) {
    EnumerationReport one = enumerate_fle(n, threads, size_cap);
    rep.by_size[n] = one.by_size[n];
    for (CorpusEntry& e : one.corpus.entries)
      rep.corpus.entries.push_back(std::move(e));
    rep.seconds += one.seconds;
  }
  return rep;
}

void save_corpus(const EnumerationReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Json sizes = Json::object();
  for (const auto& [sz, c] : report.by_size)
    sizes[std::to_string(sz)] = Json{
        {"lattices", c.lattices}, {"crls", c.crls}, {"fle", c.fle}};
  Json entries = Json::array();
  for (const CorpusEntry& e : report.corpus.entries) {
    entries.push_back(e.hash);
    save_algebra(e.algebra, dir + "/" + e.hash + ".json");
  }
  Json index;
  index["sizes"] = std::move(sizes);
  index["entries"] = std::move(entries);
  std::ofstream out(dir + "/index.json");
  if (!out) throw Error("cannot write '" + dir + "/index.json'");
  out << index.dump(2) << "\n";
}

EnumerationReport load_corpus(const std::string& dir) {
  std::ifstream in(dir + "/index.json");
  if (!in) throw Error("cannot open '" + dir + "/index.json'");
  Json index;
  try {
    in >> index;
  } catch (const Json::parse_error& e) {
    throw MalformedTableError(std::string("bad corpus index: ") + e.what());
  }

  EnumerationReport rep;
  for (const auto& [key, c] : index.at("sizes").items()) {
    SizeCounts sc;
    sc.lattices = c.at("lattices").get<int>();
    sc.crls = c.at("crls").get<int>();
    sc.fle = c.at("fle").get<int>();
    rep.by_size[std::stoi(key)] = sc;
  }
  CanonicalForm prev;
  for (const Json& h : index.at("entries")) {
    const std::string hash = h.get<std::string>();
    FleAlgebra alg = load_algebra(dir + "/" + hash + ".json");
    CanonicalForm form = canonicalize(alg);
    const std::string recomputed = canonical_hash_hex(form);
    if (recomputed != hash)
      throw Error("corpus integrity: '" + hash + "' hashes to " + recomputed);
    if (!prev.empty() && !(prev < form))
      throw Error("corpus integrity: entries out of canonical order");
    prev = form;
    rep.corpus.entries.push_back(
        CorpusEntry{std::move(alg), std::move(form), hash});
  }
  return rep;
}

bool corpus_matches(const std::string& dir, int max_size) {
  std::ifstream in(dir + "/index.json");
  if (!in) return false;
  Json index;
  try {
    in >> index;
  } catch (...) {
    return false;
  }
  if (!index.contains("sizes")) return false;
  std::set<int> want;
  for (int n = 1; n <= max_size; ++n) want.insert(n);
  std::set<int> have;
  for (const auto& [key, c] : index.at("sizes").items()) {
    (void)c;
    try {
      have.insert(std::stoi(key));
    } catch (...) {
      return false;
    }
  }
  return want == have;
}

}  // namespace fleck
