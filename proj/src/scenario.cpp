#include "landauer/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "landauer/cognition.hpp"
#include "landauer/error.hpp"

namespace landauer {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

// Splits `value` (starting at 1-based `column` of the line) on whitespace.
std::vector<Token> split(std::string_view value, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < value.size()) {
    const auto b = value.find_first_not_of(kSpace, i);
    if (b == std::string_view::npos) break;
    auto e = value.find_first_of(kSpace, b);
    if (e == std::string_view::npos) e = value.size();
    out.push_back({value.substr(b, e - b), column + static_cast<int>(b)});
    i = e;
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scenario parse() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      line(++line_no, text_.substr(pos, nl - pos));
      pos = nl + 1;
    }
    close_section();
    if (!scenario_.dynamics && !scenario_.szilard) {
      throw ParseError(1, 0, "scenario defines no [dynamics] or [szilard] section");
    }
    return std::move(scenario_);
  }

private:
  enum class Section { none, dynamics, szilard };

  void line(int no, std::string_view raw) {
    line_ = no;
    const auto hash = raw.find('#');
    const std::string_view body = hash == std::string_view::npos ? raw : raw.substr(0, hash);
    const auto first = body.find_first_not_of(kSpace);
    if (first == std::string_view::npos) return;
    const int col = static_cast<int>(first) + 1;
    const std::string_view content = trim(body);

    if (content.front() == '[') {
      if (content.back() != ']') fail(col, "unterminated section header");
      header(trim(content.substr(1, content.size() - 2)), col);
      return;
    }

    const auto eq = body.find('=');
    if (eq == std::string_view::npos) fail(col, "expected 'key = value'");
    const std::string_view key = trim(body.substr(0, eq));
    if (key.empty()) fail(col, "missing key before '='");
    const std::string_view rest = body.substr(eq + 1);
    const auto vstart = rest.find_first_not_of(kSpace);
    if (vstart == std::string_view::npos) {
      fail(static_cast<int>(eq) + 2, "missing value for key '" + std::string(key) + "'");
    }
    const int vcol = static_cast<int>(eq + 1 + vstart) + 1;
    const auto tokens = split(trim(rest), vcol);
    entry(std::string(key), col, tokens);
  }

  void header(std::string_view name, int col) {
    close_section();
    if (name == "dynamics") {
      if (seen_dynamics_) fail(col, "duplicate [dynamics] section");
      seen_dynamics_ = true;
      section_ = Section::dynamics;
      dyn_ = DynamicsSection{};
    } else if (name == "szilard") {
      if (seen_szilard_) fail(col, "duplicate [szilard] section");
      seen_szilard_ = true;
      section_ = Section::szilard;
      szi_ = SzilardSection{};
      szi_.engine.temperature = kDefaultTemperature;
      szi_.engine.cycles = 100000;
    } else {
      fail(col, "unknown section [" + std::string(name) + "]");
    }
    section_line_ = line_;
    keys_.clear();
  }

  void entry(const std::string& key, int col, const std::vector<Token>& v) {
    const bool repeatable = key == "subsumer" || key == "input";
    if (!repeatable && !keys_.insert(key).second) {
      fail(col, "duplicate key '" + key + "'");
    }
    switch (section_) {
      case Section::none:
        if (key != "output") fail(col, "unknown key '" + key + "' outside a section");
        // The path is the whole value, spaces included.
        scenario_.output_dir = std::string(v.front().text.data(),
                                           v.back().text.data() + v.back().text.size());
        return;
      case Section::dynamics:
        dynamics_entry(key, col, v);
        return;
      case Section::szilard:
        szilard_entry(key, col, v);
        return;
    }
  }

  void dynamics_entry(const std::string& key, int col, const std::vector<Token>& v) {
    if (key == "length") {
      expect_count(v, 1, key);
      const auto len = unsigned_value(v[0]);
      if (len < 1) fail(v[0].column, "length must be >= 1");
      set_length(static_cast<std::size_t>(len), v[0].column);
    } else if (key == "dt") {
      expect_count(v, 1, key);
      dyn_.dt = number(v[0]);
      if (!(dyn_.dt > 0.0)) fail(v[0].column, "dt must be > 0");
    } else if (key == "t_end") {
      expect_count(v, 1, key);
      dyn_.t_end = number(v[0]);
      if (!(dyn_.t_end > 0.0)) fail(v[0].column, "t_end must be > 0");
      has_t_end_ = true;
    } else if (key == "gamma") {
      expect_count(v, 1, key);
      dyn_.gamma = number(v[0]);
      if (!(dyn_.gamma >= 0.0)) fail(v[0].column, "gamma must be >= 0");
    } else if (key == "subsumer") {
      expect_count(v, 2, key);
      Subsumer s{shape(v[0]), number(v[1])};
      if (!(s.strength >= 0.0)) fail(v[1].column, "subsumer strength must be >= 0");
      dyn_.subsumers.push_back(std::move(s));
    } else if (key == "input") {
      if (v.size() != 2 && v.size() != 4) {
        fail(v.empty() ? col : v[0].column,
             "input expects 'shape rate' or 'shape rate start end'");
      }
      InputChannel in{shape(v[0]), number(v[1]), std::nullopt};
      if (!(in.rate >= 0.0)) fail(v[1].column, "input rate must be >= 0");
      if (v.size() == 4) {
        ActiveWindow w{number(v[2]), number(v[3])};
        if (!(w.start < w.end)) fail(v[2].column, "input window needs start < end");
        in.window = w;
      }
      dyn_.inputs.push_back(std::move(in));
    } else {
      fail(col, "unknown key '" + key + "' in [dynamics]");
    }
  }

  void szilard_entry(const std::string& key, int col, const std::vector<Token>& v) {
    auto& e = szi_.engine;
    if (key == "temperature") {
      expect_count(v, 1, key);
      e.temperature = number(v[0]);
      if (!(e.temperature > 0.0)) fail(v[0].column, "temperature must be > 0");
    } else if (key == "epsilon") {
      expect_count(v, 1, key);
      e.epsilon = number(v[0]);
      if (!(e.epsilon >= 0.0 && e.epsilon < 0.5)) {
        fail(v[0].column, "epsilon must lie in [0, 0.5)");
      }
    } else if (key == "cycles") {
      expect_count(v, 1, key);
      e.cycles = unsigned_value(v[0]);
      if (e.cycles < 1) fail(v[0].column, "cycles must be >= 1");
    } else if (key == "seed") {
      expect_count(v, 1, key);
      e.seed = unsigned_value(v[0]);
    } else {
      fail(col, "unknown key '" + key + "' in [szilard]");
    }
  }

  void close_section() {
    if (section_ == Section::dynamics) {
      if (dyn_.subsumers.empty()) fail_at(section_line_, "[dynamics] needs at least one subsumer");
      if (!has_t_end_) fail_at(section_line_, "[dynamics] is missing t_end");
      if (dyn_.t_end < dyn_.dt) fail_at(section_line_, "[dynamics] requires t_end >= dt");
      scenario_.dynamics = std::move(dyn_);
    } else if (section_ == Section::szilard) {
      scenario_.szilard = szi_;
    }
    section_ = Section::none;
    has_t_end_ = false;
  }

  void set_length(std::size_t len, int col) {
    if (dyn_.length != 0 && dyn_.length != len) {
      fail(col, "length " + std::to_string(len) + " contradicts shape length " +
                    std::to_string(dyn_.length));
    }
    dyn_.length = len;
  }

  Shape shape(const Token& t) {
    Shape s = [&] {
      try {
        return Shape::parse(t.text);
      } catch (const DomainError& e) {
        fail(t.column, e.what());
      }
    }();
    if (dyn_.length != 0 && s.length() != dyn_.length) {
      fail(t.column, "shape length mismatch: '" + std::string(t.text) + "' has length " +
                         std::to_string(s.length()) + ", expected " +
                         std::to_string(dyn_.length));
    }
    dyn_.length = s.length();
    return s;
  }

  double number(const Token& t) {
    double value = 0.0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
      fail(t.column, "expected a finite number, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  std::uint64_t unsigned_value(const Token& t) {
    std::uint64_t value = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      fail(t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  void expect_count(const std::vector<Token>& v, std::size_t n, const std::string& key) {
    if (v.size() != n) {
      const int col = v.size() > n ? v[n].column : 0;
      fail(col, "key '" + key + "' expects " + std::to_string(n) + " value(s), got " +
                    std::to_string(v.size()));
    }
  }

  [[noreturn]] void fail(int column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }
  [[noreturn]] void fail_at(int line, const std::string& message) const {
    throw ParseError(line, 0, message);
  }

  std::string_view text_;
  Scenario scenario_;
  Section section_ = Section::none;
  DynamicsSection dyn_;
  SzilardSection szi_;
  std::set<std::string> keys_;
  bool seen_dynamics_ = false;
  bool seen_szilard_ = false;
  bool has_t_end_ = false;
  int line_ = 0;
  int section_line_ = 0;
};

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  os << content;
  if (!os) throw Error("cannot write " + path.string());
}

}  // namespace

Scenario parse_scenario(std::string_view text) { return Parser(text).parse(); }

std::string to_text(const Scenario& scenario) {
  std::string out;
  if (!scenario.output_dir.empty()) out += "output = " + scenario.output_dir + "\n";
  if (const auto& d = scenario.dynamics) {
    out += "[dynamics]\n";
    out += "length = " + std::to_string(d->length) + "\n";
    out += "dt = " + exact(d->dt) + "\n";
    out += "t_end = " + exact(d->t_end) + "\n";
    out += "gamma = " + exact(d->gamma) + "\n";
    for (const auto& s : d->subsumers) {
      out += "subsumer = " + s.shape.to_string() + " " + exact(s.strength) + "\n";
    }
    for (const auto& in : d->inputs) {
      out += "input = " + in.shape.to_string() + " " + exact(in.rate);
      if (in.window) out += " " + exact(in.window->start) + " " + exact(in.window->end);
      out += "\n";
    }
  }
  if (const auto& s = scenario.szilard) {
    out += "[szilard]\n";
    out += "temperature = " + exact(s->engine.temperature) + "\n";
    out += "epsilon = " + exact(s->engine.epsilon) + "\n";
    out += "cycles = " + std::to_string(s->engine.cycles) + "\n";
    out += "seed = " + std::to_string(s->engine.seed) + "\n";
  }
  return out;
}

RunReport run(const Scenario& scenario, const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  RunReport result;
  result.scenario_echo = to_text(scenario);

  std::vector<fs::path> written;
  try {
    fs::create_directories(out_dir);
    std::string report;

    if (const auto& d = scenario.dynamics) {
      const auto structure = d->structure();
      const auto traj = integrate(structure, d->inputs, d->options());
      std::ostringstream csv;
      write_trajectory_csv(csv, structure, traj);
      const auto path = out_dir / "trajectory.csv";
      written.push_back(path);
      write_file(path, csv.str());
    }

    const ThermalContext ctx(scenario.temperature());
    report += report_block(ctx);

    if (const auto& s = scenario.szilard) {
      const auto records = simulate_cycles(s->engine);
      const auto ledger = aggregate(records, ctx);
      std::ostringstream csv;
      write_ledger_csv(csv, records);
      const auto path = out_dir / "ledger.csv";
      written.push_back(path);
      write_file(path, csv.str());
      report += summary_block(ledger, s->engine.epsilon);
    }

    const auto path = out_dir / "report.txt";
    written.push_back(path);
    write_file(path, report);

    result.outputs = written;
    result.report = std::move(report);
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    throw;
  }
  return result;
}

}  // namespace landauer
