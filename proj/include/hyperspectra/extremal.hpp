#ifndef HYPERSPECTRA_EXTREMAL_HPP
#define HYPERSPECTRA_EXTREMAL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hyperspectra/canonical.hpp"
#include "hyperspectra/classify.hpp"
#include "hyperspectra/errors.hpp"
#include "hyperspectra/families.hpp"
#include "hyperspectra/hypergraph.hpp"
#include "hyperspectra/spectral.hpp"

namespace hyperspectra {

enum class EnumerationFilter { All, LinearOnly, NonlinearOnly };

inline std::string to_string(EnumerationFilter f) {
  switch (f) {
    case EnumerationFilter::All: return "all";
    case EnumerationFilter::LinearOnly: return "linear-only";
    case EnumerationFilter::NonlinearOnly: return "nonlinear-only";
  }
  return "all";
}

/// Vertex cap for enumeration: HYPERSPECTRA_CAP when set, else 18 for k = 3
/// and 12 otherwise.
inline std::size_t enumeration_cap(int k) {
  if (const char* env = std::getenv("HYPERSPECTRA_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw InputError("HYPERSPECTRA_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return k == 3 ? 18 : 12;
}

struct EnumerationOptions {
  std::size_t cap = 0;         // 0: enumeration_cap(k)
  unsigned threads = 0;        // 0: hardware concurrency
  double tol = 1e-10;          // power iteration tolerance
  double tie_tol = 1e-9;       // co-maximizer window
};

struct EnumeratedMember {
  std::string form;
  std::string hash;
  UniformHypergraph graph;  // relabeled to the canonical labeling
  ClassLabel label;
  double rho;
};

struct EnumerationStats {
  std::size_t sequences = 0;   // edge sequences generated
  std::size_t candidates = 0;  // distinct connected edge sets passing the filter
  std::size_t members = 0;
};

struct EnumerationResult {
  std::size_t n = 0;
  int k = 0;
  EnumerationFilter filter = EnumerationFilter::All;
  std::vector<EnumeratedMember> members;  // sorted by canonical form
  std::optional<std::size_t> maximizer;
  std::vector<std::size_t> co_maximizers;  // indices within tie_tol of the max, maximizer included
  double runner_up_gap = std::numeric_limits<double>::infinity();
  EnumerationStats stats;
};

namespace detail {

// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

/// Rebuilds the hypergraph a canonical form string describes.
inline UniformHypergraph graph_from_form(const std::string& form) {
  int k = 0;
  std::size_t n = 0;
  std::size_t colon = form.find(':');
  if (std::sscanf(form.c_str(), "k%dn%zu:", &k, &n) != 2 || colon == std::string::npos) {
    throw InputError("malformed canonical form");
  }
  std::vector<Edge> edges;
  Edge cur;
  std::size_t i = colon + 1;
  while (i < form.size()) {
    std::size_t j = i;
    while (j < form.size() && form[j] >= '0' && form[j] <= '9') ++j;
    cur.push_back(static_cast<Vertex>(std::stoul(form.substr(i, j - i))));
    if (j == form.size() || form[j] == '|') {
      edges.push_back(std::move(cur));
      cur.clear();
    }
    i = j + 1;
  }
  return UniformHypergraph(k, n, std::move(edges));
}

// Candidate generator. The matching is the fixed block partition
// {0..k-1}, {k..2k-1}, ...; extra edges are added one at a time. Untouched
// vertices inside a block are interchangeable, as are untouched blocks, so
// every edge takes the lowest untouched vertices of a block and spends
// untouched blocks in order with non-increasing counts.
class MatchingFirstGenerator {
 public:
  MatchingFirstGenerator(std::size_t n, int k, std::size_t extra) : n_(n), k_(k), extra_(extra) {
    blocks_ = n / static_cast<std::size_t>(k);
    touched_.assign(blocks_, 0);
  }

  void run(const std::function<void(const std::vector<Edge>&)>& emit) {
    emit_ = &emit;
    chosen_.clear();
    step();
  }

 private:
  void step() {
    if (chosen_.size() == extra_) {
      (*emit_)(chosen_);
      return;
    }
    // Connectivity bound: each remaining edge merges at most k-1 components.
    if (components() - 1 > (extra_ - chosen_.size()) * static_cast<std::size_t>(k_ - 1)) return;
    Edge partial;
    choose_block(0, partial, static_cast<std::size_t>(k_), std::numeric_limits<std::size_t>::max(), false);
  }

  // Picks vertices block by block. `cap_fresh` bounds how many untouched
  // vertices a fresh block may contribute; `fresh_gap` records that an
  // earlier fresh block was skipped, after which fresh blocks are closed.
  void choose_block(std::size_t b, Edge& partial, std::size_t need, std::size_t cap_fresh, bool fresh_gap) {
    if (need == 0) {
      try_edge(partial);
      return;
    }
    if (b == blocks_) return;
    const std::size_t k = static_cast<std::size_t>(k_);
    const std::size_t base = b * k;
    const std::size_t t = touched_[b];
    if (t == 0) {
      if (fresh_gap) {
        choose_block(b + 1, partial, need, cap_fresh, true);
        return;
      }
      for (std::size_t take = std::min({need, k, cap_fresh}); take >= 1; --take) {
        for (std::size_t j = 0; j < take; ++j) partial.push_back(static_cast<Vertex>(base + j));
        choose_block(b + 1, partial, need - take, take, false);
        partial.resize(partial.size() - take);
      }
      choose_block(b + 1, partial, need, cap_fresh, true);
      return;
    }
    // Touched prefix: any subset. Untouched suffix: lowest j.
    const std::size_t subsets = std::size_t{1} << t;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      const std::size_t from_touched = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (from_touched > need) continue;
      for (std::size_t fresh = 0; fresh <= std::min(k - t, need - from_touched); ++fresh) {
        const std::size_t add = from_touched + fresh;
        for (std::size_t j = 0; j < t; ++j) {
          if (mask >> j & 1) partial.push_back(static_cast<Vertex>(base + j));
        }
        for (std::size_t j = 0; j < fresh; ++j) partial.push_back(static_cast<Vertex>(base + t + j));
        choose_block(b + 1, partial, need - add, cap_fresh, fresh_gap);
        partial.resize(partial.size() - add);
      }
    }
  }

  void try_edge(const Edge& e) {
    // Blocks themselves are matching edges; repeats are multiple edges.
    if (e.front() / k_ == e.back() / k_) return;
    if (std::find(chosen_.begin(), chosen_.end(), e) != chosen_.end()) return;
    std::vector<std::size_t> saved = touched_;
    for (Vertex v : e) {
      const std::size_t b = v / static_cast<std::size_t>(k_);
      touched_[b] = std::max(touched_[b], static_cast<std::size_t>(v) - b * k_ + 1);
    }
    chosen_.push_back(e);
    step();
    chosen_.pop_back();
    touched_ = std::move(saved);
  }

  std::size_t components() const {
    DisjointSets sets(blocks_);
    std::size_t count = blocks_;
    for (const Edge& e : chosen_) {
      for (Vertex v : e) {
        if (sets.unite(e.front() / k_, v / k_)) --count;
      }
    }
    return count;
  }

  std::size_t n_;
  int k_;
  std::size_t extra_;
  std::size_t blocks_ = 0;
  std::vector<std::size_t> touched_;
  std::vector<Edge> chosen_;
  const std::function<void(const std::vector<Edge>&)>* emit_ = nullptr;
};

inline bool passes(EnumerationFilter f, bool linear) {
  return f == EnumerationFilter::All || (f == EnumerationFilter::LinearOnly) == linear;
}

}  // namespace detail

/// Members sorted by canonical form; fills maximizer, co-maximizers and the
/// gap from the maximum to the best member outside the tie window.
inline void rank_members(EnumerationResult& r, double tie_tol) {
  r.maximizer.reset();
  r.co_maximizers.clear();
  r.runner_up_gap = std::numeric_limits<double>::infinity();
  if (r.members.empty()) return;
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.members.size(); ++i) {
    if (r.members[i].rho > r.members[best].rho) best = i;
  }
  r.maximizer = best;
  const double top = r.members[best].rho;
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    if (top - r.members[i].rho <= tie_tol) {
      r.co_maximizers.push_back(i);
    } else {
      r.runner_up_gap = std::min(r.runner_up_gap, top - r.members[i].rho);
    }
  }
}

/// Every connected k-uniform unicyclic hypergraph on n vertices with a perfect
/// matching, up to isomorphism, optionally restricted by linearity.
inline EnumerationResult enumerate_unicyclic_pm(std::size_t n, int k, EnumerationFilter filter = EnumerationFilter::All,
                                                const EnumerationOptions& opts = {}) {
  if (k < 3) throw InputError("enumeration requires k >= 3");
  const std::size_t kk = static_cast<std::size_t>(k);
  if (n == 0 || n % kk != 0 || n % (kk * (kk - 1)) != 0) {
    throw InputError("enumeration requires n to be a positive multiple of k(k-1)");
  }
  const std::size_t cap = opts.cap == 0 ? enumeration_cap(k) : opts.cap;
  if (n > cap) {
    throw CapacityError("enumeration: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                        "; use family mode or raise HYPERSPECTRA_CAP");
  }
  const std::size_t extra = n / (kk * (kk - 1));
  const std::size_t blocks = n / kk;

  EnumerationResult out;
  out.n = n;
  out.k = k;
  out.filter = filter;

  std::set<std::vector<Edge>> seen;
  std::vector<UniformHypergraph> candidates;
  detail::MatchingFirstGenerator gen(n, k, extra);
  gen.run([&](const std::vector<Edge>& chosen) {
    ++out.stats.sequences;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < blocks; ++b) {
      Edge e;
      for (std::size_t j = 0; j < kk; ++j) e.push_back(static_cast<Vertex>(b * kk + j));
      edges.push_back(std::move(e));
    }
    edges.insert(edges.end(), chosen.begin(), chosen.end());
    std::sort(edges.begin(), edges.end());
    if (!seen.insert(edges).second) return;
    UniformHypergraph g(k, n, std::move(edges));
    if (!is_connected(g) || !detail::passes(filter, is_linear(g))) return;
    candidates.push_back(std::move(g));
  });
  out.stats.candidates = candidates.size();

  std::vector<std::string> forms(candidates.size());
  detail::parallel_for(candidates.size(), opts.threads,
                       [&](std::size_t i) { forms[i] = canonical_form(candidates[i], std::max<std::size_t>(cap, n)); });
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

  std::vector<std::optional<EnumeratedMember>> slots(forms.size());
  detail::parallel_for(forms.size(), opts.threads, [&](std::size_t i) {
    UniformHypergraph g = detail::graph_from_form(forms[i]);
    ClassLabel label = classify(g);
    const double rho = spectral_radius(g, opts.tol).rho;
    slots[i] = EnumeratedMember{forms[i], canonical_hash(forms[i]), std::move(g), label, rho};
  });
  for (auto& s : slots) out.members.push_back(std::move(*s));
  out.stats.members = out.members.size();
  rank_members(out, opts.tie_tol);
  return out;
}

/// Members whose label satisfies pred, re-ranked.
inline EnumerationResult restrict_members(const EnumerationResult& r,
                                          const std::function<bool(const ClassLabel&)>& pred, double tie_tol = 1e-9) {
  EnumerationResult out;
  out.n = r.n;
  out.k = r.k;
  out.filter = r.filter;
  out.stats = r.stats;
  for (const auto& m : r.members) {
    if (pred(m.label)) out.members.push_back(m);
  }
  out.stats.members = out.members.size();
  rank_members(out, tie_tol);
  return out;
}

enum class Verdict { Confirmed, Refuted, OutOfRange };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::OutOfRange: return "out-of-range";
  }
  return "?";
}

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"3.1", "4.1", "5.1", "C3.1", "C3.2", "C4.1",
                                            "C4.2", "L3.7", "L3.9", "L4.3", "L4.4", "L4.7"};
  return ids;
}

/// One numeric or structural comparison inside a report. For inequality
/// checks gap is the signed margin; isomorphism checks carry gap = NaN.
struct TheoremCheck {
  int m = 0;
  std::string what;
  double gap = std::numeric_limits<double>::quiet_NaN();
  bool passed = false;
  std::string witness;  // canonical form of the offending graph on failure
};

struct TheoremReport {
  std::string id;
  int k = 0;
  int m_lo = 0;
  int m_hi = 0;
  bool exhaustive = false;
  Verdict verdict = Verdict::Confirmed;
  std::optional<double> min_gap;
  std::string counterexample;
  std::vector<TheoremCheck> checks;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  double tol = 1e-10;        // power iteration
  double gap_tol = 1e-8;     // strict inequalities must beat this
  EnumerationOptions enumeration;
};

/// Smallest m the statement covers.
inline int theorem_min_m(const std::string& id) {
  if (id == "3.1") return 2;
  if (id == "4.1") return 1;
  if (id == "5.1") return 2;
  if (id == "C3.1" || id == "C3.2" || id == "L3.7") return 3;
  if (id == "C4.1" || id == "C4.2" || id == "L4.3" || id == "L4.4" || id == "L4.7") return 2;
  if (id == "L3.9") return 9;
  throw InputError("unknown theorem id '" + id + "'");
}

namespace detail {

class FamilyRhoCache {
 public:
  FamilyRhoCache(int k, double tol) : k_(k), tol_(tol) {}

  double rho(Family f, int m) {
    const auto key = std::make_pair(static_cast<int>(f), m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const double r = spectral_radius(build_family(f, m, k_).graph, tol_).rho;
    cache_[key] = r;
    return r;
  }

 private:
  int k_;
  double tol_;
  std::map<std::pair<int, int>, double> cache_;
};

inline std::string family_member(Family f, int m) { return to_string(f) + "(m=" + std::to_string(m) + ")"; }

class ReportBuilder {
 public:
  ReportBuilder(TheoremReport& r, double gap_tol) : r_(r), gap_tol_(gap_tol) {}

  void greater(int m, const std::string& what, double gap, const std::string& witness) {
    TheoremCheck c{m, what, gap, gap > gap_tol_, ""};
    if (!c.passed) c.witness = witness;
    push(std::move(c));
  }

  void at_least(int m, const std::string& what, double gap, double slack, const std::string& witness) {
    TheoremCheck c{m, what, gap, gap >= -slack, ""};
    if (!c.passed) c.witness = witness;
    push(std::move(c));
  }

  void holds(int m, const std::string& what, bool ok, const std::string& witness) {
    TheoremCheck c{m, what, std::numeric_limits<double>::quiet_NaN(), ok, ""};
    if (!ok) c.witness = witness;
    push(std::move(c));
  }

 private:
  void push(TheoremCheck c) {
    if (!std::isnan(c.gap)) r_.min_gap = r_.min_gap ? std::min(*r_.min_gap, c.gap) : c.gap;
    if (!c.passed && r_.verdict != Verdict::Refuted) {
      r_.verdict = Verdict::Refuted;
      r_.counterexample = c.witness;
    }
    r_.checks.push_back(std::move(c));
  }

  TheoremReport& r_;
  double gap_tol_;
};

inline void family_checks(const std::string& id, int m, int k, FamilyRhoCache& rho, ReportBuilder& rb) {
  // Family mode runs past the canonical-form cap, so witnesses are named.
  auto form = [&](Family f) { return family_member(f, m); };
  auto gt = [&](Family big, Family small) {
    rb.greater(m, "rho(" + to_string(big) + ") - rho(" + to_string(small) + ")", rho.rho(big, m) - rho.rho(small, m),
               form(small));
  };
  auto iso = [&](Family a, Family b) {
    rb.holds(m, to_string(a) + " isomorphic to " + to_string(b),
             are_isomorphic(build_family(a, m, k).graph, build_family(b, m, k).graph), form(b));
  };
  auto tagged = [&](Family f, const char* tag, bool ClassTags::*field) {
    const auto h = build_family(f, m, k);
    rb.holds(m, to_string(f) + " carries tag " + tag, classify(h.graph, *h.matching).tags.*field, form(f));
  };
  if (id == "L3.7") {
    gt(Family::A, Family::B);
  } else if (id == "L3.9") {
    gt(Family::D, Family::A);
  } else if (id == "L4.3") {
    if (m >= 3) gt(Family::L, Family::A);
    gt(Family::L, Family::D);
  } else if (id == "L4.4") {
    gt(Family::L, Family::I);
  } else if (id == "L4.7") {
    gt(Family::I, Family::J);
  } else if (id == "3.1" || id == "C3.2") {
    if (m == 2) {
      iso(Family::B, Family::D);
    } else {
      const double top = std::max(rho.rho(Family::A, m), rho.rho(Family::D, m));
      rb.greater(m, "max(rho(A), rho(D)) - rho(B)", top - rho.rho(Family::B, m), form(Family::B));
      if (m >= 9) gt(Family::D, Family::A);
    }
  } else if (id == "C3.1") {
    tagged(Family::A, "U1bar", &ClassTags::U1bar);
  } else if (id == "4.1" || id == "C4.1") {
    if (m == 1) {
      iso(Family::I, Family::J);
    } else {
      gt(Family::L, Family::I);
      gt(Family::L, Family::J);
    }
  } else if (id == "C4.2") {
    tagged(Family::L, "G2bar", &ClassTags::G2bar);
  } else if (id == "5.1") {
    if (m >= 3) gt(Family::L, Family::A);
    gt(Family::L, Family::B);
    gt(Family::L, Family::D);
    gt(Family::L, Family::I);
    gt(Family::L, Family::J);
  }
}

inline void exhaustive_checks(const std::string& id, int m, int k, const VerifyOptions& opts, FamilyRhoCache& rho,
                              ReportBuilder& rb, TheoremReport& report) {
  const std::size_t n = static_cast<std::size_t>(m) * k * (k - 1);
  EnumerationFilter filter = EnumerationFilter::All;
  if (id == "3.1" || id == "C3.1" || id == "C3.2") filter = EnumerationFilter::LinearOnly;
  if (id == "4.1" || id == "C4.1" || id == "C4.2") filter = EnumerationFilter::NonlinearOnly;
  EnumerationResult all = enumerate_unicyclic_pm(n, k, filter, opts.enumeration);
  if (id == "C3.1") all = restrict_members(all, [](const ClassLabel& l) { return l.tags.U1; }, opts.enumeration.tie_tol);
  if (id == "C3.2") all = restrict_members(all, [](const ClassLabel& l) { return l.tags.U2; }, opts.enumeration.tie_tol);
  if (id == "C4.1") all = restrict_members(all, [](const ClassLabel& l) { return l.tags.G1; }, opts.enumeration.tie_tol);
  if (id == "C4.2") all = restrict_members(all, [](const ClassLabel& l) { return l.tags.G2; }, opts.enumeration.tie_tol);
  report.notes.push_back("m=" + std::to_string(m) + ": " + std::to_string(all.members.size()) + " members");
  if (all.members.empty()) {
    rb.holds(m, "class is nonempty", false, "");
    return;
  }
  const EnumeratedMember& top = all.members[*all.maximizer];
  auto is_family = [&](const EnumeratedMember& mem, Family f) { return mem.form == canonical_form(build_family(f, m, k).graph); };
  auto maximizer_is = [&](Family f) {
    rb.holds(m, "maximizer isomorphic to " + to_string(f) + " (co-maximizers: " +
                    std::to_string(all.co_maximizers.size()) + ")",
             all.co_maximizers.size() == 1 && is_family(top, f), top.form);
    if (all.members.size() > 1) {
      rb.greater(m, "runner-up gap", all.runner_up_gap, top.form);
    }
  };
  auto dominates_all = [&](double bound, const std::string& name, bool strict) {
    double worst = std::numeric_limits<double>::infinity();
    const EnumeratedMember* culprit = nullptr;
    for (const auto& mem : all.members) {
      const double gap = bound - mem.rho;
      if (gap < worst) {
        worst = gap;
        culprit = &mem;
      }
    }
    if (strict) {
      rb.greater(m, name + " - max member rho", worst, culprit->form);
    } else {
      rb.at_least(m, name + " - max member rho", worst, opts.enumeration.tie_tol, culprit->form);
    }
  };

  if (id == "5.1" || id == "C4.2" || (id == "4.1" && m >= 2)) {
    maximizer_is(Family::L);
  } else if (id == "4.1") {
    rb.holds(m, "single member isomorphic to I and J",
             all.members.size() == 1 && is_family(top, Family::I) && is_family(top, Family::J), top.form);
  } else if (id == "C4.1") {
    dominates_all(rho.rho(Family::L, m), "rho(L)", true);
  } else if (id == "C3.1") {
    maximizer_is(Family::A);
  } else if (id == "3.1" || id == "C3.2") {
    if (m == 2) {
      const bool is_b = is_family(top, Family::B);
      rb.holds(m, "maximizer isomorphic to B and D", is_b && is_family(top, Family::D), top.form);
      if (all.members.size() > 1) {
        report.notes.push_back("m=2: class holds " + std::to_string(all.members.size()) +
                               " non-isomorphic members; the statement holds for the maximizer only, "
                               "not as a singleton claim");
        rb.greater(m, "runner-up gap", all.runner_up_gap, top.form);
      }
    } else if (m <= 8) {
      dominates_all(std::max(rho.rho(Family::A, m), rho.rho(Family::D, m)), "max(rho(A), rho(D))", false);
    } else {
      maximizer_is(Family::D);
    }
  }
}

}  // namespace detail

/// Checks a statement for every m in [m_lo, m_hi]. Exhaustive mode enumerates
/// the class; family mode compares the named families only.
inline TheoremReport verify_theorem(const std::string& id, int k, int m_lo, int m_hi, bool exhaustive,
                                    const VerifyOptions& opts = {}) {
  const int min_m = theorem_min_m(id);
  if (k < 3) throw InputError("verify requires k >= 3");
  if (m_lo > m_hi) throw InputError("empty m range");
  TheoremReport report;
  report.id = id;
  report.k = k;
  report.m_lo = m_lo;
  report.m_hi = m_hi;
  report.exhaustive = exhaustive;
  if (m_lo < min_m) {
    report.verdict = Verdict::OutOfRange;
    report.notes.push_back(id + " covers m >= " + std::to_string(min_m));
    return report;
  }
  if (exhaustive) {
    const std::size_t cap = opts.enumeration.cap == 0 ? enumeration_cap(k) : opts.enumeration.cap;
    const std::size_t n_hi = static_cast<std::size_t>(m_hi) * k * (k - 1);
    if (n_hi > cap) {
      throw CapacityError("exhaustive " + id + ": n=" + std::to_string(n_hi) + " exceeds cap " + std::to_string(cap) +
                          "; rerun without --exhaustive (family mode)");
    }
  }
  detail::FamilyRhoCache rho(k, opts.tol);
  detail::ReportBuilder rb(report, opts.gap_tol);
  for (int m = m_lo; m <= m_hi; ++m) {
    if (exhaustive) {
      detail::exhaustive_checks(id, m, k, opts, rho, rb, report);
    } else {
      detail::family_checks(id, m, k, rho, rb);
    }
  }
  return report;
}

struct OpenComparisonRow {
  int m = 0;
  double rho_a = 0.0;
  double rho_d = 0.0;
  double gap = 0.0;  // rho(D) - rho(A)
};

/// rho(A) against rho(D) per m; nothing is asserted.
inline std::vector<OpenComparisonRow> resolve_open_comparison(int k, int m_lo, int m_hi, double tol = 1e-10) {
  if (m_lo < 3) throw InputError("compare-ad requires m >= 3");
  if (m_lo > m_hi) throw InputError("empty m range");
  std::vector<OpenComparisonRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    OpenComparisonRow row;
    row.m = m;
    row.rho_a = spectral_radius(build_family(Family::A, m, k).graph, tol).rho;
    row.rho_d = spectral_radius(build_family(Family::D, m, k).graph, tol).rho;
    row.gap = row.rho_d - row.rho_a;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_EXTREMAL_HPP
