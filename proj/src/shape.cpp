#include "fence/shape.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "fence/parallel.hpp"
#include "fence/poset.hpp"
#include "fence/rank.hpp"

namespace fence {

std::string_view to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::Symmetric: return "symmetric";
    case ShapeClass::TopInterlacing: return "top-interlacing";
    case ShapeClass::BottomInterlacing: return "bottom-interlacing";
    case ShapeClass::UnimodalOnly: return "unimodal";
    case ShapeClass::NotUnimodal: return "not-unimodal";
  }
  return "?";
}

ShapeClass measured_shape(const std::vector<mpz_class>& seq) {
  const bool uni = is_unimodal(seq);
  if (uni && is_symmetric(seq)) return ShapeClass::Symmetric;
  if (is_bottom_interlacing(seq)) return ShapeClass::BottomInterlacing;
  if (is_top_interlacing(seq)) return ShapeClass::TopInterlacing;
  return uni ? ShapeClass::UnimodalOnly : ShapeClass::NotUnimodal;
}

ShapeClass measured_shape(const RankPoly& p) { return measured_shape(p.sequence()); }

bool satisfies(const std::vector<mpz_class>& seq, ShapeClass predicted) {
  switch (predicted) {
    case ShapeClass::Symmetric: return is_symmetric(seq) && is_unimodal(seq);
    case ShapeClass::TopInterlacing: return is_top_interlacing(seq);
    case ShapeClass::BottomInterlacing: return is_bottom_interlacing(seq);
    case ShapeClass::UnimodalOnly: return is_unimodal(seq);
    case ShapeClass::NotUnimodal: return true;
  }
  return false;
}

ShapeClass predict_shape(const Composition& alpha) {
  const auto& p = alpha.parts();
  const std::size_t s = p.size();
  if (s == 1) return ShapeClass::Symmetric;
  if (s % 2 == 0) return ShapeClass::BottomInterlacing;
  if (p.front() > p.back()) return ShapeClass::BottomInterlacing;
  if (p.front() < p.back()) return ShapeClass::TopInterlacing;
  const ShapeClass inner = predict_shape(Composition(std::vector<int>(p.begin() + 1, p.end() - 1)));
  switch (inner) {
    case ShapeClass::TopInterlacing: return ShapeClass::BottomInterlacing;
    case ShapeClass::BottomInterlacing: return ShapeClass::TopInterlacing;
    default: return inner;
  }
}

namespace {

std::vector<Composition> all_up_to(int max_size, bool even_only) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_size; ++n)
    for (auto& c : even_only ? even_compositions_of(n) : compositions_of(n)) out.push_back(std::move(c));
  return out;
}

template <class F>
Report run(std::string name, const std::vector<Composition>& items, int jobs, F&& f) {
  Report report;
  report.check = std::move(name);
  auto rows = parallel_map(items.size(), jobs, [&](std::size_t i) { return f(items[i]); });
  for (auto& batch : rows)
    for (auto& r : batch) report.add(std::move(r));
  return report;
}

std::string join(const std::vector<mpz_class>& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " " : "") << seq[i];
  return os.str();
}

std::string center_text(const mpq_class& c) { return "palindromic about " + c.get_str(); }

CheckRecord record(const Composition& a, const char* kind, const char* check) {
  CheckRecord r;
  r.composition = a.to_string();
  r.size = a.size();
  r.kind = kind;
  r.check = check;
  return r;
}

}  // namespace

Report verify_main_theorem(int max_size, int jobs) {
  Report report = run("main-theorem", all_up_to(max_size, false), jobs, [](const Composition& a) {
    const auto seq = rank_poly(a).sequence();
    const ShapeClass predicted = predict_shape(a);
    CheckRecord r = record(a, "fence", "main-theorem");
    r.expected = std::string(to_string(predicted));
    r.measured = std::string(to_string(measured_shape(seq)));
    r.pass = is_unimodal(seq) && satisfies(seq, predicted);
    return std::vector<CheckRecord>{r};
  });
  for (const auto& r : report.records) report.count(r.expected);
  return report;
}

Report verify_circular_symmetry(int max_size, int jobs) {
  return run("circular-symmetry", all_up_to(max_size, true), jobs, [](const Composition& a) {
    const RankPoly r = rank_poly(a, Kind::Circular);
    const mpq_class center(a.size(), 2);
    CheckRecord rec = record(a, "circular", "circular-symmetry");
    rec.expected = center_text(center);
    rec.pass = is_palindromic_about(r, center);
    rec.measured = rec.pass ? rec.expected : r.to_string();
    return std::vector<CheckRecord>{rec};
  });
}

Report verify_cyclic_invariance(int max_size, int jobs) {
  return run("cyclic-invariance", all_up_to(max_size, true), jobs, [](const Composition& a) {
    const RankPoly r = rank_poly(a, Kind::Circular);
    CheckRecord rec = record(a, "circular", "cyclic-invariance");
    rec.expected = "equal under every rotation; shift reverses";
    std::string bad;
    for (std::size_t k = 1; k < a.length() && bad.empty(); ++k)
      if (rank_poly(a.rotate(k), Kind::Circular) != r) bad = "rotation by " + std::to_string(k) + " differs";
    if (bad.empty() && rank_poly(a.shift_one(), Kind::Circular) != poly_reverse(r, a.size()))
      bad = "one-step shift is not the reversal";
    rec.pass = bad.empty();
    rec.measured = rec.pass ? rec.expected : bad;
    return std::vector<CheckRecord>{rec};
  });
}

namespace {

// Even-length sequences whose first/last entries may be 0, interior >= 1.
std::vector<Composition> padded_even(int m) {
  std::vector<Composition> out;
  for (const auto& c : compositions_of(m)) {
    for (int lead = 0; lead <= 1; ++lead)
      for (int trail = 0; trail <= 1; ++trail) {
        if ((c.length() + static_cast<std::size_t>(lead + trail)) % 2 != 0) continue;
        std::vector<int> p;
        if (lead) p.push_back(0);
        p.insert(p.end(), c.parts().begin(), c.parts().end());
        if (trail) p.push_back(0);
        out.push_back(Composition::half_open(std::move(p)));
      }
  }
  return out;
}

std::vector<int> bump(const Composition& a, bool front) {
  std::vector<int> p = a.parts();
  ++(front ? p.front() : p.back());
  return p;
}

RankPoly endpoint_difference(const Composition& beta) {
  const ZigzagPoset f = fence(beta);
  const NodeId first = 1, last = f.node_count();
  RankPoly diff;
  for (const IdealSet& i : enumerate_ideals(f)) {
    const bool l = i.contains(first), r = i.contains(last);
    if (l && !r) diff += RankPoly::monomial(i.size());
    if (r && !l) diff -= RankPoly::monomial(i.size());
  }
  return diff;
}

CheckRecord palindrome_row(const Composition& beta, const char* kind, const char* check,
                           const RankPoly& diff, const mpq_class& center) {
  CheckRecord rec = record(beta, kind, check);
  rec.expected = center_text(center);
  rec.pass = is_palindromic_about(diff, center);
  rec.measured = rec.pass ? rec.expected : diff.to_expression();
  return rec;
}

}  // namespace

Report verify_statements_ABC(int max_n, int jobs) {
  struct Item {
    char statement;
    int n;
    Composition beta;
  };
  std::vector<Item> items;
  for (int n = 2; n <= max_n; ++n) {
    for (auto& b : even_compositions_of(n - 1)) items.push_back({'A', n, b});
    for (auto& b : padded_even(n - 1)) items.push_back({'B', n, b});
    for (auto& b : even_compositions_of(n)) items.push_back({'C', n, b});
  }
  auto rows = parallel_map(items.size(), jobs, [&](std::size_t k) {
    const Item& it = items[k];
    switch (it.statement) {
      case 'A':
        return palindrome_row(it.beta, "fence", "statement-A", endpoint_difference(it.beta),
                              mpq_class(it.n, 2));
      case 'B': {
        const RankPoly d = rank_poly(Composition::half_open(bump(it.beta, true))) -
                           rank_poly(Composition::half_open(bump(it.beta, false)));
        return palindrome_row(it.beta, "fence", "statement-B", d, mpq_class(it.n, 2));
      }
      default: {
        const RankPoly d = rank_poly(Composition(bump(it.beta, true)), Kind::Circular) -
                           rank_poly(Composition(bump(it.beta, false)), Kind::Circular);
        return palindrome_row(it.beta, "circular", "statement-C", d, mpq_class(it.n + 1, 2));
      }
    }
  });
  Report report;
  report.check = "statements-ABC";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    rows[k].size = items[k].n;
    report.count(std::string("statement-") + items[k].statement);
    report.add(std::move(rows[k]));
  }
  return report;
}

bool is_1k1k(const Composition& alpha) {
  if (alpha.length() != 4) return false;
  const auto& p = alpha.parts();
  for (int off = 0; off < 2; ++off) {
    const int a = p[static_cast<std::size_t>(off)], b = p[static_cast<std::size_t>(off) + 1];
    const int c = p[static_cast<std::size_t>(off) + 2], d = p[(static_cast<std::size_t>(off) + 3) % 4];
    if (a == 1 && c == 1 && b == d) return true;
  }
  return false;
}

Report circular_unimodality_scan(int max_size, int jobs) {
  Report report = run("circular-unimodality", all_up_to(max_size, true), jobs, [](const Composition& a) {
    const auto seq = rank_poly(a, Kind::Circular).sequence();
    const int n = a.size();
    CheckRecord rec = record(a, "circular", "circular-unimodality");
    const bool uni = is_unimodal(seq);
    if (n % 2 == 1) {
      rec.expected = "unimodal";
      rec.measured = uni ? "unimodal" : join(seq);
      rec.pass = uni;
      return std::vector<CheckRecord>{rec};
    }
    const int t = n / 2;
    bool rising = true;
    for (int i = 1; i < t; ++i)
      if (seq[static_cast<std::size_t>(i)] < seq[static_cast<std::size_t>(i) - 1]) rising = false;
    rec.expected = "non-decreasing below the middle";
    if (!rising) {
      rec.measured = join(seq);
      rec.pass = false;
      return std::vector<CheckRecord>{rec};
    }
    rec.measured = uni ? "unimodal" : "middle dip";
    std::vector<CheckRecord> rows{rec};
    if (!uni) {
      CheckRecord c = record(a, "circular", "circular-unimodality-conjecture");
      c.expected = "non-unimodal only for (1,k,1,k)";
      const bool dip = seq[static_cast<std::size_t>(t) - 1] > seq[static_cast<std::size_t>(t)];
      c.measured = std::string(dip ? "middle dip " : "dip ") + join(seq);
      c.pass = dip && is_1k1k(a);
      c.severity = Severity::ConjectureCounterexample;
      rows.push_back(c);
    }
    return rows;
  });
  std::set<Composition> exceptions;
  for (const auto& r : report.records)
    if (r.check == "circular-unimodality-conjecture")
      exceptions.insert(dihedral_canonical(Composition::parse(r.composition)));
  for (const auto& c : exceptions) report.notes.push_back("not unimodal: (" + c.to_string() + ")");
  report.count("non-unimodal-classes", static_cast<long>(exceptions.size()));
  return report;
}

bool corollary_applies(const Composition& alpha) {
  const auto& p = alpha.parts();
  const std::size_t s = p.size();
  for (std::size_t i = 0; i < s; ++i) {
    const int a = p[i], b = p[(i + 1) % s], c = p[(i + 2) % s];
    if (a > 1 && b > 1) return true;
    if (b == 1 && std::abs(a - c) > 1) return true;
  }
  return false;
}

Report top_deletion_unimodality_check(const Composition& alpha) {
  const ZigzagPoset p = circular_fence(alpha);
  const auto seq = rank_poly(p).sequence();
  const bool uni = is_unimodal(seq);
  Report report;
  report.check = "top-deletion";

  bool hypothesis = false;
  std::string witness;
  for (const SharedNode& top : p.shared_tops()) {
    const auto runs = p.induced_runs(p.full_mask() & ~bit(top.node));
    const auto deleted = path_rank_poly(runs.front()).sequence();
    if (is_top_interlacing(deleted)) {
      hypothesis = true;
      witness = "x" + std::to_string(top.node);
      break;
    }
  }
  CheckRecord lemma = record(alpha, "circular", "top-deletion");
  lemma.expected = hypothesis ? "unimodal (deleting " + witness + " is top-interlacing)"
                              : "no assertion";
  lemma.measured = uni ? "unimodal" : "not unimodal";
  lemma.pass = !hypothesis || uni;
  report.add(lemma);
  report.count(hypothesis ? "lemma-applies" : "lemma-silent");

  if (corollary_applies(alpha)) {
    CheckRecord cor = record(alpha, "circular", "top-deletion-corollary");
    cor.expected = "unimodal";
    cor.measured = lemma.measured;
    cor.pass = uni;
    report.add(cor);
    report.count("corollary-applies");
  }
  return report;
}

Report verify_top_deletion(int max_size, int jobs) {
  const auto items = all_up_to(max_size, true);
  auto parts = parallel_map(items.size(), jobs,
                            [&](std::size_t i) { return top_deletion_unimodality_check(items[i]); });
  Report report;
  report.check = "top-deletion";
  for (auto& r : parts) report.merge(std::move(r));
  return report;
}

}  // namespace fence
