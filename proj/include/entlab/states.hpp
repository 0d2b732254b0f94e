#pragma once

#include <cstdint>
#include <vector>

namespace entlab::states {

// Zeeman parameters of a spin species in a static field.
struct PhysicalParams {
    double frequency_hz = 0.0;      // nu = gamma * B
    double temperature_k = 0.0;     // T
    double field_tesla = 0.0;       // B
    double gyromagnetic_ratio = 0.0;  // gamma, Hz per Tesla

    static PhysicalParams from_field(double gamma_hz_per_tesla, double field_tesla,
                                     double temperature_k);
    void validate() const;  // every field strictly positive
};

// Polarization alpha = h*nu / (2 k T).
double alpha_from_physical(const PhysicalParams& params);

// N identical uncoupled spin-1/2 particles in thermal equilibrium at
// polarization alpha.  Diagonal in the computational basis; all weights kept
// in the log domain so N*alpha up to ~1e6 never overflows.
class ThermalSpec {
public:
    ThermalSpec(int n_qubits, double alpha);

    int n_qubits() const { return n_; }
    double alpha() const { return alpha_; }
    // ln Z = N ln(2 cosh alpha)
    double log_partition() const { return log_z_; }

    // ln <i|rho_th|i> = [N - 2 w(i)] alpha - ln Z.  Off-diagonal entries are
    // identically zero.  Qubit 1 is the most significant bit of the index.
    double log_weight(std::uint64_t basis_index) const;
    // Same value for any index of Hamming weight w.
    double log_weight_for_hamming(int w) const;

    // Explicit 2^N diagonal (requires n <= 30).
    std::vector<double> diagonal_weights() const;

private:
    int n_;
    double alpha_;
    double log_z_;
};

enum class PureForm { ground_state, generic_bias };

// (1 - eps) I/d + eps |0><0| and the generic biased mixture of the same eps.
struct EffectivePureSpec {
    std::uint64_t dimension = 0;  // d = 2^N
    double epsilon = 0.0;
    PureForm form = PureForm::ground_state;

    EffectivePureSpec(int n_qubits, double epsilon, PureForm form = PureForm::ground_state);

    // Diagonal weight at a basis index: (1-eps)/d + eps at 0, (1-eps)/d else.
    double weight(std::uint64_t index) const;
    std::vector<double> diagonal() const;
};

enum class EpsMode { exact, approximate };

// Ground-state excess of the effective pure state equivalent to an N-qubit
// thermal state at polarization alpha.  The exact branch evaluates
// e^{N alpha}/Z - (1 - e^{N alpha}/Z)/(2^N - 1); the approximate branch uses
// N alpha / (2^N - 1).  Both run in the log domain.
double epsilon_from_alpha(int n, double alpha, EpsMode mode);

}  // namespace entlab::states
