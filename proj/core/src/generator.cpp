#include "sadp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sadp/error.hpp"

namespace sadp {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Cell randomCell(Rng& rng, const CellShape& shape, const std::string& name) {
  Cell c;
  c.name = name;
  c.width = rng.uniform(shape.min_width, shape.max_width);
  c.height = shape.height;
  const Coord h = shape.height;
  if (shape.rails) {
    c.patterns.push_back({"VSS", {{0, 0, c.width, 1}}, Net::Ground});
    c.patterns.push_back({"VDD", {{0, h - 1, c.width, h}}, Net::Power});
  }

  static const std::vector<Coord> offsets{1, 1, 2, 3};
  const Coord left = rng.pick(offsets);
  const Coord right = c.width - 1 - rng.pick(offsets);
  const Coord lo_min = shape.rails ? 2 : 0;
  const Coord hi_max = shape.rails ? h - 2 : h;

  int count = 0;
  auto add = [&](Pattern p) {
    p.id = "S" + std::to_string(count++);
    c.patterns.push_back(std::move(p));
  };
  for (Coord x = left; x <= right && count < shape.max_signal_patterns; x += rng.uniform(2, 4)) {
    const Coord lo = lo_min + rng.uniform(0, 3);
    const Coord hi = hi_max - rng.uniform(0, 3);
    if (hi - lo >= 6 && rng.chance(35) && count + 1 < shape.max_signal_patterns) {
      const Coord split = rng.uniform(lo + 2, hi - 3);
      const Coord gap = rng.uniform(1, std::min<Coord>(3, hi - split - 1));
      add({"", {{x, lo, x + 1, split}}, Net::Signal});
      add({"", {{x, split + gap, x + 1, hi}}, Net::Signal});
    } else if (x + 2 <= right && rng.chance(20)) {
      const bool top = rng.chance(50);
      add({"", {{x, lo, x + 1, hi}, top ? Rect{x + 1, hi - 1, x + 2, hi} : Rect{x + 1, lo, x + 2, lo + 1}},
           Net::Signal});
    } else {
      add({"", {{x, lo, x + 1, hi}}, Net::Signal});
    }
  }
  if (count == 0) add({"", {{left, lo_min + 2, left + 1, hi_max - 2}}, Net::Signal});

  // Pins sit on the first, middle and last signal column.
  std::vector<const Pattern*> signals;
  for (const auto& p : c.patterns)
    if (!p.isRail()) signals.push_back(&p);
  const char* pin_names[] = {"A", "B", "Z"};
  const std::size_t at[] = {0, signals.size() / 2, signals.size() - 1};
  for (int k = 0; k < 3; ++k) {
    const Rect& r = signals[at[k]]->rects.front();
    c.pins.push_back({pin_names[k], r.x_lo, (r.y_lo + r.y_hi) / 2});
  }
  return c;
}

namespace {

std::vector<Cell> generateLibraryCells(Rng& rng, const GeneratorOptions& opts) {
  const int total_weight = opts.pg_mix[0] + opts.pg_mix[1] + opts.pg_mix[2];
  if (total_weight <= 0 || std::any_of(opts.pg_mix.begin(), opts.pg_mix.end(), [](int w) { return w < 0; }))
    throw std::invalid_argument("pg mix weights must be non-negative with a positive sum");

  std::vector<Cell> cells;
  const PgType types[] = {PgType::FreePG, PgType::SamePG, PgType::DiffPG};
  for (std::size_t i = 0; i < opts.lib_cells; ++i) {
    std::int64_t w = rng.uniform(0, total_weight - 1);
    int t = 0;
    while (w >= opts.pg_mix[static_cast<std::size_t>(t)]) w -= opts.pg_mix[static_cast<std::size_t>(t++)];

    CellShape shape;
    shape.max_signal_patterns = opts.max_signal_patterns;
    bool done = false;
    for (int attempt = 0; attempt < 20000 && !done; ++attempt) {
      Cell c = randomCell(rng, shape, "C" + std::to_string(i));
      // Push chains towards the rails for the PG-linked types.
      if (types[t] == PgType::SamePG && c.patterns.size() > 3) {
        auto& last = c.patterns.back();
        const auto& prev = c.patterns[c.patterns.size() - 2];
        if (last.rects.size() == 1 && prev.rects.front().x_lo != last.rects.front().x_lo) {
          last.rects.front().y_lo = 2;
          last.rects.front().y_hi = shape.height - 2;
        }
      }
      try {
        const auto colorings = enumerateColorings(buildConflictGraph(c, opts.s_dp));
        if (classifyPG(c, colorings) != types[t]) continue;
      } catch (const NotDecomposable&) {
        continue;
      } catch (const TooManyComponents&) {
        continue;
      }
      cells.push_back(std::move(c));
      done = true;
    }
    if (!done) throw Error(std::string("could not sample a ") + toString(types[t]) + " cell");
  }
  return cells;
}

}  // namespace

Benchmark generateBenchmark(const GeneratorOptions& opts) {
  if (opts.rows <= 0) throw std::invalid_argument("rows must be positive");
  if (opts.cells == 0) throw std::invalid_argument("cells must be positive");
  if (opts.lib_cells == 0) throw std::invalid_argument("lib-cells must be positive");
  if (opts.max_signal_patterns < 1) throw std::invalid_argument("cells need at least one signal pattern");
  if (!(opts.util > 0 && opts.util <= 1)) throw std::invalid_argument("util must be in (0, 1]");

  Rng rng(opts.seed);
  Benchmark b;
  b.library.params.s_dp = opts.s_dp;
  b.library.params.w_spacer = opts.w_spacer;
  b.library.cells = generateLibraryCells(rng, opts);
  const ProfiledLibrary lib = profileLibrary(b.library);

  Placement& p = b.placement;
  p.library = "generated";
  p.row_height = b.library.cells.front().height;

  // Assign instances to rows and pick their masters.
  const auto rows = static_cast<std::size_t>(opts.rows);
  std::vector<std::vector<std::size_t>> masters(rows);
  for (std::size_t k = 0; k < opts.cells; ++k)
    masters[k * rows / opts.cells].push_back(
        static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(lib.size()) - 1)));

  Coord capacity = 0;
  for (const auto& m : masters) {
    Coord sum = 0;
    for (std::size_t i : m) sum += lib.profiles[i].cell.width;
    capacity = std::max(capacity, static_cast<Coord>(std::ceil(static_cast<double>(sum) / opts.util)));
  }

  std::size_t serial = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    Row row;
    row.index = static_cast<int>(r);
    row.y = static_cast<Coord>(r) * p.row_height;
    row.capacity = capacity;

    bool need_same = false;
    bool need_diff = false;
    for (std::size_t i : masters[r]) {
      need_same |= lib.profiles[i].pg == PgType::SamePG;
      need_diff |= lib.profiles[i].pg == PgType::DiffPG;
    }
    const Color power = rng.chance(50) ? Color::Mandrel : Color::Trim;
    Color ground = rng.chance(50) ? Color::Mandrel : Color::Trim;
    if (need_same && !need_diff) ground = power;
    if (need_diff && !need_same) ground = other(power);

    Coord used = 0;
    for (std::size_t i : masters[r]) used += lib.profiles[i].cell.width;
    // Whitespace goes into a few holes; the rest trails the row.
    Coord white = capacity - used;
    const std::size_t n = masters[r].size();
    std::vector<Coord> hole_after(n, 0);
    const int holes = static_cast<int>(rng.uniform(1, 4));
    for (int h = 0; h < holes && n > 1; ++h) {
      const Coord amount = rng.uniform(0, white / 2);
      hole_after[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2))] += amount;
      white -= amount;
    }

    Coord x = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const CellProfile& prof = lib.profiles[masters[r][k]];
      std::vector<int> admissible;
      for (std::size_t c = 0; c < prof.colorings.size(); ++c) {
        const auto& cand = prof.colorings[c];
        if (prof.power >= 0 && cand[static_cast<std::size_t>(prof.power)] != power) continue;
        if (prof.ground >= 0 && cand[static_cast<std::size_t>(prof.ground)] != ground) continue;
        admissible.push_back(static_cast<int>(c));
      }
      PlacedCell pc;
      pc.instance = "u" + std::to_string(serial++);
      pc.cell = prof.cell.name;
      pc.x = x;
      pc.orient = rng.chance(50) ? Orientation::R0 : Orientation::MY;
      // A row with both SamePG and DiffPG cells cannot satisfy every rail.
      pc.coloring = admissible.empty() ? 0 : rng.pick(admissible);
      row.cells.push_back(std::move(pc));
      x += prof.cell.width + hole_after[k];
    }
    p.rows.push_back(std::move(row));
  }

  // Local nets: each instance drives one net reaching up to three neighbours
  // within a window of the instance order.
  static const std::vector<std::string> inputs{"A", "B"};
  const auto total = static_cast<std::int64_t>(serial);
  for (std::int64_t k = 0; k < total; ++k) {
    NetDef net;
    net.name = "n" + std::to_string(k);
    net.pins.push_back({"u" + std::to_string(k), "Z"});
    const std::int64_t fanout = rng.uniform(1, 3);
    for (std::int64_t f = 0; f < fanout; ++f) {
      const std::int64_t lo = std::max<std::int64_t>(0, k - 10);
      const std::int64_t hi = std::min<std::int64_t>(total - 1, k + 10);
      const std::int64_t sink = rng.uniform(lo, hi);
      if (sink == k) continue;
      net.pins.push_back({"u" + std::to_string(sink), rng.pick(inputs)});
    }
    if (net.pins.size() > 1) p.netlist.nets.push_back(std::move(net));
  }
  return b;
}

}  // namespace sadp
