#include "wmod/cartan.hpp"

#include <stdexcept>

namespace wmod {

namespace {
const std::complex<double> I{0.0, 1.0};
}

std::string to_string(const GeneratorId& g) {
  switch (g.kind) {
    case GenKind::H: return "H" + std::to_string(g.j);
    case GenKind::E: return "E" + std::to_string(g.j);
    case GenKind::F: return "F" + std::to_string(g.j);
    case GenKind::X: return "X" + std::to_string(g.j);
    case GenKind::Y: return "Y" + std::to_string(g.j);
    case GenKind::IH: return "iH" + std::to_string(g.j);
  }
  return "?";
}

GeneratorId parse_generator(const std::string& s, int n) {
  GeneratorId g{};
  std::size_t pos = 1;
  if (s.size() >= 2 && (s[0] == 'i' || s[0] == 'I') && (s[1] == 'H' || s[1] == 'h')) {
    g.kind = GenKind::IH;
    pos = 2;
  } else if (!s.empty()) {
    switch (s[0]) {
      case 'H': case 'h': g.kind = GenKind::H; break;
      case 'E': case 'e': g.kind = GenKind::E; break;
      case 'F': case 'f': g.kind = GenKind::F; break;
      case 'X': case 'x': g.kind = GenKind::X; break;
      case 'Y': case 'y': g.kind = GenKind::Y; break;
      default: throw std::invalid_argument("unknown generator: " + s);
    }
  } else {
    throw std::invalid_argument("empty generator name");
  }
  g.j = std::stoi(s.substr(pos));
  if (g.j < 0 || g.j >= n)
    throw std::invalid_argument("generator index out of range 0.." + std::to_string(n - 1) +
                                ": " + s);
  return g;
}

std::vector<GeneratorId> chevalley_generators(int n) {
  std::vector<GeneratorId> gs;
  for (int j = 0; j < n; ++j) gs.push_back({GenKind::H, j});
  for (int j = 0; j < n; ++j) gs.push_back({GenKind::E, j});
  for (int j = 0; j < n; ++j) gs.push_back({GenKind::F, j});
  return gs;
}

CartanData::CartanData(LieType type, int rank) : type_(type), rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

int CartanData::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw std::out_of_range("Cartan matrix index");
  if (i == j) return 2;
  if (type_ == LieType::A) return (i - j == 1 || j - i == 1) ? -1 : 0;
  // type C, long simple root last: entry(i,j) = alpha_j(H_i), so the -2 sits
  // in the long root's column at row n-2.
  if (i - j == 1 || j - i == 1) {
    if (i == rank_ - 2 && j == rank_ - 1) return -2;
    return -1;
  }
  return 0;
}

ExpectedBracket expected_bracket(const CartanData& cartan, GeneratorId g1, GeneratorId g2) {
  ExpectedBracket out;
  auto k1 = g1.kind, k2 = g2.kind;
  auto cart = [&](int i, int j) { return cartan.entry(i, j); };

  if (k1 == GenKind::H && k2 == GenKind::H) {
    out.defined = true;  // bracket 0
    return out;
  }
  if (k1 == GenKind::H && (k2 == GenKind::E || k2 == GenKind::F)) {
    out.defined = true;
    double c = cart(g1.j, g2.j);
    if (k2 == GenKind::F) c = -c;
    if (c != 0.0) out.value.parts.push_back({g2, c});
    return out;
  }
  if ((k1 == GenKind::E || k1 == GenKind::F) && k2 == GenKind::H) {
    out = expected_bracket(cartan, g2, g1);
    for (auto& p : out.value.parts) p.second = -p.second;
    return out;
  }
  if (k1 == GenKind::E && k2 == GenKind::F) {
    out.defined = true;
    if (g1.j == g2.j) out.value.parts.push_back({{GenKind::H, g1.j}, 1.0});
    return out;
  }
  if (k1 == GenKind::F && k2 == GenKind::E) {
    out.defined = true;
    if (g1.j == g2.j) out.value.parts.push_back({{GenKind::H, g1.j}, -1.0});
    return out;
  }
  if (k1 == k2 && (k1 == GenKind::E || k1 == GenKind::F)) {
    if (g1.j == g2.j) {
      out.defined = true;  // [g,g] = 0
      return out;
    }
    if (!cartan.adjacent(g1.j, g2.j)) {
      out.defined = true;  // commuting pair
      return out;
    }
    return out;  // adjacent same-type: governed by Serre words
  }
  throw std::invalid_argument("expected_bracket is defined on Chevalley generators only");
}

GeneratorCombo real_form_combo(GeneratorId g) {
  GeneratorCombo c;
  switch (g.kind) {
    case GenKind::H:
    case GenKind::E:
    case GenKind::F:
      c.parts.push_back({g, 1.0});
      return c;
    case GenKind::IH:
      c.parts.push_back({{GenKind::H, g.j}, I});
      return c;
    case GenKind::X:
      if (g.j == 0) {
        c.parts.push_back({{GenKind::E, 0}, 1.0});
        c.parts.push_back({{GenKind::F, 0}, 1.0});
      } else {
        c.parts.push_back({{GenKind::F, g.j}, 1.0});
        c.parts.push_back({{GenKind::E, g.j}, -1.0});
      }
      return c;
    case GenKind::Y:
      if (g.j == 0) {
        c.parts.push_back({{GenKind::E, 0}, -I});
        c.parts.push_back({{GenKind::F, 0}, I});
      } else {
        c.parts.push_back({{GenKind::E, g.j}, I});
        c.parts.push_back({{GenKind::F, g.j}, I});
      }
      return c;
  }
  return c;
}

GeneratorCombo chevalley_from_real(GeneratorId g) {
  GeneratorCombo c;
  switch (g.kind) {
    case GenKind::H:
      c.parts.push_back({{GenKind::IH, g.j}, -I});
      return c;
    case GenKind::E:
      if (g.j == 0) {
        c.parts.push_back({{GenKind::X, 0}, 0.5});
        c.parts.push_back({{GenKind::Y, 0}, 0.5 * I});
      } else {
        c.parts.push_back({{GenKind::X, g.j}, -0.5});
        c.parts.push_back({{GenKind::Y, g.j}, -0.5 * I});
      }
      return c;
    case GenKind::F:
      if (g.j == 0) {
        c.parts.push_back({{GenKind::X, 0}, 0.5});
        c.parts.push_back({{GenKind::Y, 0}, -0.5 * I});
      } else {
        c.parts.push_back({{GenKind::X, g.j}, 0.5});
        c.parts.push_back({{GenKind::Y, g.j}, -0.5 * I});
      }
      return c;
    default:
      c.parts.push_back({g, 1.0});
      return c;
  }
}

}  // namespace wmod
