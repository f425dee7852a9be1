//! State vectors over the computational basis.

use num_complex::Complex;

use crate::encoding::CostDiagonal;
use crate::error::{Error, Result};
use crate::real::{real, Real};
use crate::MAX_QUBITS;

/// A pure `n`-qubit state as `2^n` complex amplitudes with unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<R: Real> {
    qubits: usize,
    amplitudes: Vec<Complex<R>>,
}

fn check_qubits(qubits: usize) -> Result<()> {
    if qubits < 1 || qubits > MAX_QUBITS {
        return Err(Error::QubitCountUnsupported { qubits, max: MAX_QUBITS });
    }
    Ok(())
}

impl<R: Real> StateVector<R> {
    /// Ground state of the transverse-field start Hamiltonian: amplitude
    /// `(−1)^parity(j) / √2^n` on every basis state `|j⟩`. Its energy under
    /// `g·Σσ_x` is `−n·g`.
    pub fn transverse_ground(qubits: usize) -> Result<Self> {
        check_qubits(qubits)?;
        let dimension = 1usize << qubits;
        let scale = (real::<R>(dimension as f64)).sqrt().recip();
        let amplitudes = (0..dimension)
            .map(|j| {
                let sign = if (j as u64).count_ones() % 2 == 0 { scale } else { -scale };
                Complex::new(sign, R::zero())
            })
            .collect();
        Ok(Self { qubits, amplitudes })
    }

    /// The basis state `|index⟩`.
    pub fn basis_state(qubits: usize, index: usize) -> Result<Self> {
        check_qubits(qubits)?;
        if index >= 1usize << qubits {
            return Err(Error::IndexOutOfRange { index, qubits });
        }
        let mut amplitudes = vec![Complex::new(R::zero(), R::zero()); 1usize << qubits];
        amplitudes[index] = Complex::new(R::one(), R::zero());
        Ok(Self { qubits, amplitudes })
    }

    /// Wraps raw amplitudes, checking the power-of-two length and unit norm
    /// (within `1e−10`).
    pub fn from_amplitudes(amplitudes: Vec<Complex<R>>) -> Result<Self> {
        if !amplitudes.len().is_power_of_two() || amplitudes.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "amplitude count {} is not a power of two >= 2",
                amplitudes.len()
            )));
        }
        let qubits = amplitudes.len().trailing_zeros() as usize;
        check_qubits(qubits)?;
        let state = Self { qubits, amplitudes };
        let drift = (state.norm() - R::one()).abs();
        if drift > real(1e-10) {
            return Err(Error::InvalidParameter(format!(
                "amplitudes are not normalized: |norm - 1| = {:e}",
                drift.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(state)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<R>] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex<R>] {
        &mut self.amplitudes
    }

    /// Euclidean norm of the amplitude vector.
    pub fn norm(&self) -> R {
        self.amplitudes.iter().map(|a| a.norm_sqr()).fold(R::zero(), |s, v| s + v).sqrt()
    }

    /// Occupation probability of every basis state.
    pub fn populations(&self) -> Vec<R> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Squared overlap with a basis state, `|⟨index|ψ⟩|²`.
    pub fn fidelity(&self, index: usize) -> Result<R> {
        if index >= self.dimension() {
            return Err(Error::IndexOutOfRange { index, qubits: self.qubits });
        }
        Ok(self.amplitudes[index].norm_sqr())
    }

    /// Overlap magnitude with a basis state, `|⟨index|ψ⟩|`.
    pub fn overlap(&self, index: usize) -> Result<R> {
        Ok(self.fidelity(index)?.sqrt())
    }

    /// Complex inner product `⟨self|other⟩`.
    pub fn inner_product(&self, other: &Self) -> Result<Complex<R>> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                state: self.dimension(),
                diagonal: other.dimension(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(Complex::new(R::zero(), R::zero()), |acc, (a, b)| acc + a.conj() * b))
    }

    /// Squared overlap between two states, `|⟨self|other⟩|²`.
    pub fn state_fidelity(&self, other: &Self) -> Result<R> {
        Ok(self.inner_product(other)?.norm_sqr())
    }

    /// Total population of the zero-cost basis states. Sums over the whole
    /// solution manifold, so degenerate factorizations are counted once each.
    pub fn success_probability(&self, diagonal: &CostDiagonal) -> Result<R> {
        if diagonal.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch {
                state: self.dimension(),
                diagonal: diagonal.dimension(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(diagonal.costs())
            .filter(|(_, &cost)| cost == 0)
            .map(|(a, _)| a.norm_sqr())
            .fold(R::zero(), |s, v| s + v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::FactorInstance;
    use approx::assert_abs_diff_eq;

    #[test]
    fn one_qubit_ground_state() {
        let state = StateVector::<f64>::transverse_ground(1).unwrap();
        let r = 1.0 / 2f64.sqrt();
        assert_abs_diff_eq!(state.amplitudes()[0].re, r, epsilon = 1e-15);
        assert_abs_diff_eq!(state.amplitudes()[1].re, -r, epsilon = 1e-15);
    }

    #[test]
    fn parity_signs_on_three_qubits() {
        let state = StateVector::<f64>::transverse_ground(3).unwrap();
        // |011⟩ has even parity, so a positive amplitude 1/√8.
        assert_abs_diff_eq!(state.amplitudes()[0b011].re, 8f64.sqrt().recip(), epsilon = 1e-15);
        assert_abs_diff_eq!(state.amplitudes()[0b100].re, -(8f64.sqrt().recip()), epsilon = 1e-15);
        assert_abs_diff_eq!(state.norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn qubit_cap_is_enforced() {
        assert!(matches!(
            StateVector::<f64>::transverse_ground(0),
            Err(Error::QubitCountUnsupported { .. })
        ));
        assert!(matches!(
            StateVector::<f64>::transverse_ground(MAX_QUBITS + 1),
            Err(Error::QubitCountUnsupported { .. })
        ));
    }

    #[test]
    fn from_amplitudes_rejects_unnormalized_input() {
        let bad = vec![Complex::new(1.0f64, 0.0), Complex::new(1.0, 0.0)];
        assert!(StateVector::from_amplitudes(bad).is_err());
        let good = vec![Complex::new(0.6f64, 0.0), Complex::new(0.0, 0.8)];
        assert!(StateVector::from_amplitudes(good).is_ok());
    }

    #[test]
    fn fidelity_and_overlap() {
        let state = StateVector::<f64>::transverse_ground(3).unwrap();
        for j in 0..8 {
            assert_abs_diff_eq!(state.fidelity(j).unwrap(), 0.125, epsilon = 1e-15);
        }
        let basis = StateVector::<f64>::basis_state(3, 5).unwrap();
        assert_abs_diff_eq!(basis.fidelity(5).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(basis.overlap(5).unwrap(), 1.0, epsilon = 1e-15);
        assert!(basis.fidelity(8).is_err());
    }

    #[test]
    fn success_probability_examples() {
        let inst = FactorInstance::new(21).unwrap();
        let diag = CostDiagonal::build(&inst).unwrap();
        let uniform = StateVector::<f64>::transverse_ground(3).unwrap();
        assert_abs_diff_eq!(uniform.success_probability(&diag).unwrap(), 0.125, epsilon = 1e-15);
        let solved = StateVector::<f64>::basis_state(3, 0b111).unwrap();
        assert_abs_diff_eq!(solved.success_probability(&diag).unwrap(), 1.0, epsilon = 1e-15);
        // Complement identity: success + non-solution populations = 1.
        let total: f64 = uniform.populations().iter().sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn success_probability_counts_degenerate_solutions() {
        let inst = FactorInstance::new(35).unwrap();
        let diag = CostDiagonal::build(&inst).unwrap();
        let uniform = StateVector::<f64>::transverse_ground(inst.qubits()).unwrap();
        let expected = 2.0 / inst.dimension() as f64;
        assert_abs_diff_eq!(uniform.success_probability(&diag).unwrap(), expected, epsilon = 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let inst = FactorInstance::new(21).unwrap();
        let diag = CostDiagonal::build(&inst).unwrap();
        let small = StateVector::<f64>::transverse_ground(2).unwrap();
        assert!(matches!(
            small.success_probability(&diag),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
