#include "fence/tiling.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "fence/errors.hpp"

namespace fence {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool is_red(Cell c) { return c == Cell::RedStart || c == Cell::RedCont; }

}  // namespace

Cell Tiling::at(int row, int column) const {
  return cells[static_cast<std::size_t>(mod(row - 1, rows))][static_cast<std::size_t>(mod(column, period))];
}

std::string Tiling::render() const {
  std::string out;
  for (const auto& r : cells) {
    for (Cell c : r) out += static_cast<char>(c);
    out += '\n';
  }
  return out;
}

Tiling Tiling::parse(const std::string& text) {
  Tiling t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<Cell> row;
    for (char ch : line) {
      switch (ch) {
        case '.': row.push_back(Cell::Yellow); break;
        case 'B': row.push_back(Cell::Black); break;
        case 'R': row.push_back(Cell::RedStart); break;
        case 'r': row.push_back(Cell::RedCont); break;
        case ' ': case '\t': case '\r': case '/': break;
        default: throw std::invalid_argument(std::string("unknown tiling cell '") + ch + "'");
      }
    }
    if (row.empty()) continue;
    if (!t.cells.empty() && row.size() != t.cells.front().size())
      throw std::invalid_argument("tiling rows differ in length");
    t.cells.push_back(std::move(row));
  }
  if (t.cells.empty()) throw std::invalid_argument("empty tiling");
  t.rows = static_cast<int>(t.cells.size());
  t.period = static_cast<int>(t.cells.front().size());
  return t;
}

std::vector<BlackTile> Tiling::black_tiles() const {
  std::vector<BlackTile> out;
  for (int r = 1; r <= rows; ++r) {
    // Walk the row cyclically, skipping red cells, from just after a yellow cell.
    std::vector<int> cols;
    for (int c = 0; c < period; ++c)
      if (!is_red(at(r, c))) cols.push_back(c);
    if (cols.empty()) continue;
    std::size_t start = 0;
    while (start < cols.size() && at(r, cols[start]) != Cell::Yellow) ++start;
    if (start == cols.size()) {
      out.push_back({r, cols.front(), static_cast<int>(cols.size())});
      continue;
    }
    int len = 0, first = 0;
    for (std::size_t k = 1; k <= cols.size(); ++k) {
      const int c = cols[(start + k) % cols.size()];
      if (at(r, c) == Cell::Black) {
        if (len++ == 0) first = c;
      } else if (len > 0) {
        out.push_back({r, first, len});
        len = 0;
      }
    }
  }
  return out;
}

std::vector<RedTile> Tiling::red_tiles() const {
  std::vector<RedTile> out;
  for (int r = 1; r <= rows; ++r)
    for (int c = 0; c < period; ++c)
      if (at(r, c) == Cell::RedStart) out.push_back({r, c, r == rows});
  return out;
}

Tiling Tiling::shifted(int k) const {
  Tiling t = *this;
  for (int r = 1; r <= rows; ++r)
    for (int c = 0; c < period; ++c) t.cells[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] = at(r, c + k);
  return t;
}

bool Tiling::equal_up_to_shift(const Tiling& other) const {
  if (rows != other.rows || period != other.period) return false;
  for (int k = 0; k < period; ++k)
    if (shifted(k) == other) return true;
  return false;
}

std::vector<Cell> encode_column(const ZigzagPoset& p, IdealSet ideal) {
  const int rows = static_cast<int>(p.segments().size());
  std::vector<Cell> col(static_cast<std::size_t>(rows), Cell::Yellow);
  auto put = [&](int row, Cell c) {
    Cell& slot = col[static_cast<std::size_t>(row - 1)];
    if (slot != Cell::Yellow) throw InternalError("two tiles in one cell");
    slot = c;
  };
  std::vector<int> start_row(static_cast<std::size_t>(p.node_count()) + 1, 0);
  for (const auto& s : p.shared_tops()) start_row[static_cast<std::size_t>(s.node)] = s.left;
  for (const auto& s : p.shared_bottoms()) start_row[static_cast<std::size_t>(s.node)] = s.left;
  for (Mask m = p.maximal_elements(ideal.mask); m; m &= m - 1) {
    const NodeId x = std::countr_zero(m) + 1;
    if (const int row = start_row[static_cast<std::size_t>(x)]) {
      put(row, Cell::RedStart);
      put(row % rows + 1, Cell::RedCont);
    } else {
      put(p.segment_of(x), Cell::Black);
    }
  }
  return col;
}

Tiling encode_tiling(const Orbit& o, const Composition& alpha) {
  const ZigzagPoset p = circular_fence(alpha);
  Tiling t;
  t.rows = static_cast<int>(alpha.length());
  t.period = static_cast<int>(o.period());
  t.cells.assign(static_cast<std::size_t>(t.rows), std::vector<Cell>(o.period(), Cell::Yellow));
  for (std::size_t j = 0; j < o.period(); ++j) {
    const auto col = encode_column(p, o.ideals[j]);
    for (std::size_t r = 0; r < col.size(); ++r) t.cells[r][j] = col[r];
  }
  std::string why;
  if (!validate_tiling(t, alpha, why)) throw InternalError("encoded tiling breaks an axiom: " + why);
  return t;
}

bool validate_tiling(const Tiling& t, const Composition& alpha) {
  std::string why;
  return validate_tiling(t, alpha, why);
}

bool validate_tiling(const Tiling& t, const Composition& alpha, std::string& why) {
  const auto& parts = alpha.parts();
  if (t.rows != static_cast<int>(parts.size()) || t.rows % 2 != 0 || t.period < 1 ||
      t.cells.size() != parts.size()) {
    why = "dimensions";
    return false;
  }
  for (const auto& row : t.cells)
    if (row.size() != static_cast<std::size_t>(t.period)) {
      why = "ragged rows";
      return false;
    }
  auto fail = [&](const std::string& msg, int r, int c) {
    why = msg + " at row " + std::to_string(r) + ", column " + std::to_string(c);
    return false;
  };
  auto yellow_pair = [&](int r, int c) { return t.at(r, c) == Cell::Yellow && t.at(r + 1, c) == Cell::Yellow; };

  for (int r = 1; r <= t.rows; ++r) {
    const int a = parts[static_cast<std::size_t>(r - 1)];
    for (int c = 0; c < t.period; ++c) {
      const Cell here = t.at(r, c);
      if (here == Cell::RedStart && t.at(r + 1, c) != Cell::RedCont) return fail("unpaired red start", r, c);
      if (here == Cell::RedCont && t.at(r - 1, c) != Cell::RedStart) return fail("unpaired red end", r, c);
      if (here == Cell::Black && a == 1) return fail("black cell in a row of length 1", r, c);
      const bool wants_red = r % 2 == 1 ? yellow_pair(r, c + 1) : yellow_pair(r, c - 1);
      if ((here == Cell::RedStart) != wants_red) return fail(r % 2 ? "axiom (b)" : "axiom (c)", r, c);
    }
    // axiom (a): ignoring red, the row reads cyclically as (B^(a-1) .)^b
    std::string seq;
    for (int c = 0; c < t.period; ++c)
      if (!is_red(t.at(r, c))) seq += static_cast<char>(t.at(r, c));
    if (seq.find('B') == std::string::npos) continue;
    const auto last_dot = seq.rfind('.');
    if (last_dot == std::string::npos) return fail("axiom (a): no yellow cell", r, 0);
    seq = seq.substr(last_dot + 1) + seq.substr(0, last_dot + 1);
    std::size_t run = 0;
    for (char ch : seq) {
      if (ch == 'B') {
        ++run;
      } else {
        if (run != static_cast<std::size_t>(a - 1)) return fail("axiom (a): black run of wrong length", r, 0);
        run = 0;
      }
    }
  }
  return true;
}

Orbit decode_tiling(const Tiling& t, const Composition& alpha) {
  std::string why;
  if (!validate_tiling(t, alpha, why)) throw InvalidTiling("tiling breaks an axiom: " + why);
  const ZigzagPoset p = circular_fence(alpha);
  auto column = [&](int c) {
    std::vector<Cell> col;
    for (int r = 1; r <= t.rows; ++r) col.push_back(t.at(r, c));
    return col;
  };
  const auto first = column(0);
  for (const IdealSet& start : enumerate_ideals(p)) {
    if (encode_column(p, start) != first) continue;
    Orbit o;
    IdealSet cur = start;
    bool ok = true;
    for (int j = 0; j < t.period && ok; ++j) {
      if (j > 0 && encode_column(p, cur) != column(j)) ok = false;
      o.ideals.push_back(cur);
      cur = rowmotion(p, cur);
    }
    if (!ok || cur != start) continue;
    for (std::size_t j = 1; j < o.ideals.size() && ok; ++j)
      if (o.ideals[j] == start) ok = false;
    if (!ok) continue;
    std::size_t best = 0;
    for (std::size_t j = 1; j < o.ideals.size(); ++j)
      if (o.ideals[j].mask < o.ideals[best].mask) best = j;
    std::rotate(o.ideals.begin(), o.ideals.begin() + static_cast<std::ptrdiff_t>(best), o.ideals.end());
    return o;
  }
  throw InvalidTiling("no orbit of " + alpha.to_string() + " encodes to this tiling");
}

OrbitStats stats_from_tiling(const Tiling& t, const Composition& alpha) {
  const ZigzagPoset p = circular_fence(alpha);
  const auto& parts = alpha.parts();
  const int rows = t.rows;
  const long period = t.period;
  const long n = alpha.size();
  OrbitStats st;
  st.period = period;
  st.rows.assign(static_cast<std::size_t>(rows), {});
  for (const BlackTile& b : t.black_tiles()) ++st.rows[static_cast<std::size_t>(b.row - 1)].b;
  for (const RedTile& r : t.red_tiles()) ++st.rows[static_cast<std::size_t>(r.row - 1)].r;
  for (int r = 1; r <= rows; ++r)
    for (int c = 0; c < t.period; ++c)
      if (t.at(r, c) == Cell::Yellow) ++st.rows[static_cast<std::size_t>(r - 1)].w;

  auto row = [&](int i) -> const RowCounts& { return st.rows[static_cast<std::size_t>(mod(i - 1, rows))]; };
  auto part = [&](int i) -> long { return parts[static_cast<std::size_t>(mod(i - 1, rows))]; };

  long twice_chi = n * period;
  for (int i = 1; i <= rows; ++i) {
    st.M += row(i).b * (part(i) - 1) + row(i).r;
    twice_chi -= (i % 2 ? -1 : 1) * row(i).r * (part(i) + part(i + 1));
  }
  if (twice_chi % 2 != 0) throw InternalError("odd value for twice chi");
  st.chi = twice_chi / 2;

  st.M_x.assign(static_cast<std::size_t>(n) + 1, 0);
  st.chi_x.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Segment& seg : p.segments()) {
    const int i = seg.index;
    const auto inner = seg.unshared_bottom_up();
    for (std::size_t j = 1; j <= inner.size(); ++j) {
      const auto x = static_cast<std::size_t>(inner[j - 1]);
      st.M_x[x] = row(i).b;
      st.chi_x[x] = row(i).b * (part(i) - static_cast<long>(j)) + (i % 2 ? row(i).r : row(i - 1).r);
    }
  }
  for (const SharedNode& s : p.shared_tops()) {
    const long r = row(s.left).r;
    st.M_x[static_cast<std::size_t>(s.node)] = r;
    st.chi_x[static_cast<std::size_t>(s.node)] = r;
  }
  for (const SharedNode& s : p.shared_bottoms()) {
    const long r = row(s.left).r;
    st.M_x[static_cast<std::size_t>(s.node)] = r;
    st.chi_x[static_cast<std::size_t>(s.node)] = period - r;
  }
  return st;
}

Report verify_tilings(const Composition& alpha) {
  const ZigzagPoset p = circular_fence(alpha);
  Report report;
  report.check = "tilings";
  bool round_ok = true, stats_ok = true, row_ok = true;
  std::string round_msg, stats_msg, row_msg;
  const auto os = orbits(p);
  for (std::size_t k = 0; k < os.size(); ++k) {
    const std::string label = "orbit " + std::to_string(k);
    Tiling t;
    try {
      t = encode_tiling(os[k], alpha);
      const Orbit back = decode_tiling(t, alpha);
      if (back.ideals != os[k].ideals || !encode_tiling(back, alpha).equal_up_to_shift(t)) {
        if (round_ok) round_msg = label + ": round trip differs";
        round_ok = false;
      }
    } catch (const std::exception& e) {
      if (round_ok) round_msg = label + ": " + e.what();
      round_ok = false;
      continue;
    }
    const OrbitStats direct = orbit_stats(os[k], p);
    const OrbitStats tiled = stats_from_tiling(t, alpha);
    if (!(direct == tiled)) {
      if (stats_ok)
        stats_msg = label + ": M " + std::to_string(tiled.M) + " vs " + std::to_string(direct.M) + ", chi " +
                    std::to_string(tiled.chi) + " vs " + std::to_string(direct.chi);
      stats_ok = false;
    }
    for (std::size_t i = 0; i < tiled.rows.size(); ++i) {
      const RowCounts& rc = tiled.rows[i];
      const RowCounts& prev = tiled.rows[(i + tiled.rows.size() - 1) % tiled.rows.size()];
      const long a = alpha.parts()[i];
      const bool ok = rc.w * a + rc.r + prev.r == tiled.period && (rc.b == 0 || rc.b == rc.w);
      if (!ok && row_ok) row_msg = label + ": row " + std::to_string(i + 1);
      row_ok = row_ok && ok;
    }
  }
  auto rec = [&](const std::string& check, const std::string& expected, bool ok, const std::string& msg) {
    CheckRecord r;
    r.composition = alpha.to_string();
    r.size = alpha.size();
    r.kind = "circular";
    r.check = check;
    r.expected = expected;
    r.measured = ok ? expected : msg;
    r.pass = ok;
    r.severity = Severity::TheoremViolation;
    report.add(r);
  };
  rec("tiling-roundtrip", "decode(encode(o)) = o", round_ok, round_msg);
  rec("tiling-stats", "tile counts give orbit M and chi", stats_ok, stats_msg);
  rec("tiling-row-identity", "w_i a_i + r_i + r_(i-1) = period", row_ok, row_msg);
  return report;
}

}  // namespace fence
