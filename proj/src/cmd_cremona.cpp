#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "severi/commands.hpp"
#include "severi/geometry.hpp"

namespace severi {

using nlohmann::ordered_json;

namespace {

RVector parse_coords(const std::string& text, std::size_t dim) {
  RVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty coordinate in '" + text + "'");
    out.push_back(Rational::parse(std::string_view(item).substr(a, b - a + 1)));
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("empty coordinate in '" + text + "'");
  if (out.size() != dim)
    throw std::invalid_argument("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

ordered_json strings(const RVector& v) { return ordered_json(coord_strings(v)); }

}  // namespace

VerificationReport cmd_cremona(ModelKind kind, const std::string& coords) {
  const CubicSpaceModel& m = model(kind);
  const Point w = m.point(parse_coords(coords, m.dim()));

  VerificationReport rep;
  rep.command = "cremona";
  rep.config.models = {kind};
  rep.config.trials = 1;

  const Rational d = m.det(w);
  const Point s = m.sharp(w);
  ordered_json res;
  res["model"] = m.name();
  res["point"] = strings(w.coords);
  res["det"] = d.str();
  res["grad"] = strings(m.grad(w).coords);
  res["sharp"] = strings(s.coords);

  SuiteRunner r(rep.config, "cremona", m.name());
  if (w.is_zero()) {
    res["locus"] = "zero vector";
    res["note"] = "not a projective point";
  } else if (s.is_zero()) {
    res["locus"] = "on X";
    res["note"] = "total-transform regime: F(w, w, .) vanishes, G is undefined at w";
    r.run("total_transform_regime", 1, [&](Trial& t) {
      t.input("w", w);
      try {
        cremona(m, w);
      } catch (const TotalTransformRegime&) {
        return true;
      }
      return false;
    });
  } else {
    const CremonaImage g = cremona(m, w);
    res["locus"] = d.is_zero() ? "on Sec(X) - X" : "off Sec(X)";
    res["cremona_direction"] = strings(g.direction.coords);
    res["cremona_scale"] = g.scale.str();
    if (d.is_zero()) {
      res["note"] = "image lies on the dual variety X*";
      r.run("image_on_dual_X", 1, [&](Trial& t) {
        t.input("w", w);
        return m.sharp(m.from_dual(g.direction)).is_zero();
      });
    } else {
      r.run("involution", 1, [&](Trial& t) {
        t.input("w", w);
        return involution_check(m, w) && proportional(m.sharp(m.from_dual(g.direction)), w);
      });
    }
  }
  rep.suites.push_back(r.take());
  rep.result_json = res.dump();
  return rep;
}

}  // namespace severi
