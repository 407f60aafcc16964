#include "rbsep/io.hpp"

#include "rbsep/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rbsep {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

Rational parse_coord(const std::string& tok, int line_no) {
  auto r = parse_rational(tok);
  if (!r) throw ParseError(line_no, "not a rational number: '" + tok + "'");
  return *r;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<Point> red, blue;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || (tokens[0] != "R" && tokens[0] != "B"))
      throw ParseError(line_no, "expected 'R <x> <y>' or 'B <x> <y>'");
    Point p{parse_coord(tokens[1], line_no), parse_coord(tokens[2], line_no)};
    (tokens[0] == "R" ? red : blue).push_back(std::move(p));
  }
  return Instance::make(std::move(red), std::move(blue));
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream out;
  for (const Point& p : instance.red) out << "R " << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  for (const Point& p : instance.blue) out << "B " << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  return out.str();
}

std::vector<Line> parse_solution(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "V" && tokens.size() == 2) {
      lines.push_back(Line::vertical(parse_coord(tokens[1], line_no)));
    } else if (tokens[0] == "H" && tokens.size() == 2) {
      lines.push_back(Line::horizontal(parse_coord(tokens[1], line_no)));
    } else if (tokens[0] == "G" && tokens.size() == 4) {
      lines.push_back(Line::general(parse_coord(tokens[1], line_no), parse_coord(tokens[2], line_no),
                                    parse_coord(tokens[3], line_no)));
    } else {
      throw ParseError(line_no, "expected 'V <x>', 'H <y>' or 'G <a> <b> <c>'");
    }
  }
  return lines;
}

std::string emit_solution(const std::vector<Line>& lines, const std::string& solver) {
  std::ostringstream out;
  out << "# cost=" << lines.size() << " solver=" << solver << '\n';
  for (const Line& l : lines) {
    switch (l.kind()) {
      case LineKind::Vertical:
        out << "V " << to_string(l.offset()) << '\n';
        break;
      case LineKind::Horizontal:
        out << "H " << to_string(l.offset()) << '\n';
        break;
      case LineKind::General:
        out << "G " << to_string(l.a()) << ' ' << to_string(l.b()) << ' ' << to_string(l.c()) << '\n';
        break;
    }
  }
  return out.str();
}

S2THSInstance parse_s2ths(const std::string& text) {
  S2THSInstance inst;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto to_int = [](const std::string& tok, int ln) {
    try {
      return std::stoi(tok);
    } catch (...) {
      throw ParseError(ln, "not an integer: '" + tok + "'");
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head == "k" && tokens.size() == 2) {
      inst.k = to_int(tokens[1], line_no);
    } else if (head == "t" && tokens.size() == 2) {
      inst.t = to_int(tokens[1], line_no);
    } else if (head == "sigma") {
      for (std::size_t i = 1; i < tokens.size(); ++i) inst.sigma.push_back(to_int(tokens[i], line_no));
    } else if (head == "sigma_j") {
      std::vector<int> perm;
      for (std::size_t i = 1; i < tokens.size(); ++i) perm.push_back(to_int(tokens[i], line_no));
      inst.sigma_j.push_back(std::move(perm));
    } else if ((head == "A" || head == "B") && tokens.size() == 3) {
      auto& ivs = head == "A" ? inst.intervals_a : inst.intervals_b;
      ivs.emplace_back(to_int(tokens[1], line_no), to_int(tokens[2], line_no));
    } else {
      throw ParseError(line_no, "unrecognized record '" + head + "'");
    }
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  return inst;
}

std::string emit_s2ths(const S2THSInstance& inst) {
  std::ostringstream out;
  out << "k " << inst.k << "\nt " << inst.t << "\nsigma";
  for (int v : inst.sigma) out << ' ' << v;
  out << '\n';
  for (const auto& perm : inst.sigma_j) {
    out << "sigma_j";
    for (int v : perm) out << ' ' << v;
    out << '\n';
  }
  for (auto [s, s2] : inst.intervals_a) out << "A " << s << ' ' << s2 << '\n';
  for (auto [s, s2] : inst.intervals_b) out << "B " << s << ' ' << s2 << '\n';
  return out.str();
}

std::string emit_layout_sidecar(const LayoutMetadata& layout) {
  nlohmann::json j;
  j["k"] = layout.k;
  j["t"] = layout.t;
  j["ell"] = layout.ell.str();
  j["ell_b"] = layout.ell_b.str();
  j["v_hat"] = layout.v_hat.str();
  j["h_hat"] = layout.h_hat.str();
  j["z"] = layout.z.str();
  j["eps"] = to_string(layout.eps);
  j["eps_f"] = to_string(layout.eps_f);
  j["cos"] = to_string(layout.cos5);
  j["sin"] = to_string(layout.sin5);
  j["x0A"] = to_string(layout.x0A);
  j["y0A"] = to_string(layout.y0A);
  j["x0Sigma"] = to_string(layout.x0Sigma);
  j["y1"] = to_string(layout.y1);
  j["y2"] = to_string(layout.y2);
  j["xB0"] = to_string(layout.xB0);
  j["yB0"] = to_string(layout.yB0);
  j["x1col"] = to_string(layout.x1col);

  auto lines_json = [](const std::vector<Line>& lines) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Line& l : lines)
      arr.push_back({{"a", to_string(l.a())}, {"b", to_string(l.b())}, {"c", to_string(l.c())}});
    return arr;
  };
  j["lines"]["HL"] = lines_json(layout.hl);
  j["lines"]["VL"] = lines_json(layout.vl);
  j["lines"]["VLp"] = lines_json(layout.vlp);
  j["lines"]["HLp"] = lines_json(layout.hlp);
  j["lines"]["SL"] = lines_json(layout.sl);
  j["lines"]["SLp"] = lines_json(layout.slp);
  j["lines"]["F"] = lines_json(layout.forced);

  nlohmann::json gadgets = nlohmann::json::array();
  for (const GadgetInfo& g : layout.gadgets) {
    const char* tag = nullptr;
    switch (g.tag) {
      case GadgetTag::Alley: tag = "alley"; break;
      case GadgetTag::Interval: tag = "interval"; break;
      case GadgetTag::Track: tag = "track"; break;
      case GadgetTag::Sigma: tag = "sigma"; break;
      case GadgetTag::HalfPerm: tag = "half-perm"; break;
      case GadgetTag::Outer: tag = "outer"; break;
    }
    gadgets.push_back({{"name", g.name},
                       {"tag", tag},
                       {"frame", g.frame == LayoutFrame::World ? "world" : "track-b"},
                       {"box", {to_string(g.x0), to_string(g.y0), to_string(g.x1), to_string(g.y1)}}});
  }
  j["gadgets"] = std::move(gadgets);
  return j.dump(2) + "\n";
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const std::vector<Line>& lines) {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  bool first = true;
  auto feed = [&](const Point& p) {
    const double x = p.x.convert_to<double>();
    const double y = p.y.convert_to<double>();
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  };
  for (const Point& p : instance.red) feed(p);
  for (const Point& p : instance.blue) feed(p);
  const double margin_x = std::max((max_x - min_x) * 0.05, 0.5);
  const double margin_y = std::max((max_y - min_y) * 0.05, 0.5);
  min_x -= margin_x;
  max_x += margin_x;
  min_y -= margin_y;
  max_y += margin_y;

  const double width = 800.0;
  const double scale = width / std::max(max_x - min_x, 1e-12);
  const double height = (max_y - min_y) * scale;
  auto sx = [&](double x) { return (x - min_x) * scale; };
  auto sy = [&](double y) { return height - (y - min_y) * scale; };  // y grows upward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const Line& l : lines) {
    // Clip to the viewport: evaluate the line on the box borders.
    const double a = l.a().convert_to<double>();
    const double b = l.b().convert_to<double>();
    const double c = l.c().convert_to<double>();
    double x1, y1, x2, y2;
    if (std::abs(b) < 1e-12) {  // vertical-ish: x = c / a
      x1 = x2 = c / a;
      y1 = min_y;
      y2 = max_y;
    } else {
      x1 = min_x;
      y1 = (c - a * min_x) / b;
      x2 = max_x;
      y2 = (c - a * max_x) / b;
    }
    out << "<line x1=\"" << fmt(sx(x1)) << "\" y1=\"" << fmt(sy(y1)) << "\" x2=\"" << fmt(sx(x2))
        << "\" y2=\"" << fmt(sy(y2)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const Point& p : instance.red) {
    out << "<circle cx=\"" << fmt(sx(p.x.convert_to<double>())) << "\" cy=\""
        << fmt(sy(p.y.convert_to<double>())) << "\" r=\"3\" fill=\"crimson\"/>\n";
  }
  for (const Point& p : instance.blue) {
    out << "<circle cx=\"" << fmt(sx(p.x.convert_to<double>())) << "\" cy=\""
        << fmt(sy(p.y.convert_to<double>())) << "\" r=\"3\" fill=\"royalblue\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Instance generate_random_instance(int reds, int blues, long grid, uint64_t seed) {
  if (reds < 0 || blues < 0 || grid < 1) throw std::invalid_argument("generate_random_instance: bad parameters");
  Rng rng(seed);
  std::vector<Point> red, blue;
  for (int i = 0; i < reds; ++i)
    red.push_back({Rational(rng.range(0, grid - 1)), Rational(rng.range(0, grid - 1))});
  for (int i = 0; i < blues; ++i)
    blue.push_back({Rational(rng.range(0, grid - 1)), Rational(rng.range(0, grid - 1))});
  return Instance::make(std::move(red), std::move(blue));
}

Instance generate_grid_instance(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("generate_grid_instance: bad parameters");
  std::vector<Point> red, blue;
  for (int x = 0; x < width; ++x) {
    for (int y = 0; y < height; ++y) {
      ((x + y) % 2 == 0 ? red : blue).push_back({Rational(x), Rational(y)});
    }
  }
  return Instance::make(std::move(red), std::move(blue));
}

}  // namespace rbsep
