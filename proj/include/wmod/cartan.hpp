#ifndef WMOD_CARTAN_HPP
#define WMOD_CARTAN_HPP

#include <complex>
#include <string>
#include <vector>

namespace wmod {

enum class GenKind { H, E, F, X, Y, IH };

/// Chevalley generator H_j/E_j/F_j or real-form element iH_j/X_j/Y_j, 0 <= j <= n-1.
struct GeneratorId {
  GenKind kind;
  int j;

  bool operator==(const GeneratorId& o) const { return kind == o.kind && j == o.j; }
};

std::string to_string(const GeneratorId& g);
GeneratorId parse_generator(const std::string& s, int n);

/// The 3n Chevalley generators in order H_0..H_{n-1}, E_0.., F_0...
std::vector<GeneratorId> chevalley_generators(int n);

enum class LieType { A, C };

/// Cartan matrix a_{ij} = alpha_j(H_i) and bracket bookkeeping for the
/// Chevalley-Serre presentation.
class CartanData {
 public:
  CartanData(LieType type, int rank);

  int rank() const { return rank_; }
  LieType type() const { return type_; }
  int entry(int i, int j) const;
  bool adjacent(int i, int j) const { return i != j && entry(i, j) != 0; }

 private:
  LieType type_;
  int rank_;
};

/// Linear combination of Chevalley generators with complex coefficients.
struct GeneratorCombo {
  std::vector<std::pair<GeneratorId, std::complex<double>>> parts;
};

/// [g1,g2] as stated by the presentation: defined for H-H, H-E, H-F, E-F and
/// non-adjacent E-E / F-F pairs; `defined=false` for adjacent same-type pairs
/// (those are governed by Serre words instead).
struct ExpectedBracket {
  bool defined = false;
  GeneratorCombo value;  // empty combo means bracket 0
};

ExpectedBracket expected_bracket(const CartanData& cartan, GeneratorId g1, GeneratorId g2);

/// Real-form conversion: X_0 = E_0+F_0, Y_0 = -i(E_0-F_0); for j >= 1
/// X_j = F_j-E_j, Y_j = i(E_j+F_j); iH_j = i*H_j. H/E/F pass through.
GeneratorCombo real_form_combo(GeneratorId g);

/// Inverse direction: E_j and F_j as combinations of X_j, Y_j.
GeneratorCombo chevalley_from_real(GeneratorId g);

}  // namespace wmod

#endif
