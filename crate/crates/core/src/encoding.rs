//! Encoding of a factorization problem into qubit registers.
//!
//! An odd composite `N` is factored by minimizing `f(x, y) = (N − x·y)²` over
//! odd trial factors. Both factors end in a 1 bit, so that bit is implicit:
//! the `x` register holds `X'` with `x = 2·X' + 1`, and likewise for `y`. The
//! cost of every basis state forms the diagonal of the problem Hamiltonian,
//! which also admits an exact expansion over tensor products of `σ_z`
//! operators.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::primes::{is_prime, odd_semiprime_factors};
use crate::walsh::walsh_transform;
use crate::MAX_QUBITS;

/// Largest register budget accepted by the instance enumerators.
pub const MAX_ENUMERATION_QUBITS: usize = 20;

fn bit_length(value: u64) -> u32 {
    64 - value.leading_zeros()
}

fn integer_sqrt(value: u64) -> u64 {
    let mut root = (value as f64).sqrt() as u64;
    while root > 0 && (root as u128) * (root as u128) > value as u128 {
        root -= 1;
    }
    while ((root + 1) as u128) * ((root + 1) as u128) <= value as u128 {
        root += 1;
    }
    root
}

/// An odd composite number together with its register layout.
///
/// The `x` register needs `m(⌊√N⌋_odd) − 1` qubits and the `y` register
/// `m(⌊N/3⌋) − 1`, where `m(b)` is the bit length of `b` and `⌊·⌋_odd` the
/// largest odd integer below. The implicit trailing 1 bit of each factor is
/// what saves the `− 1`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FactorInstance {
    number: u64,
    bit_length: u32,
    x_qubits: usize,
    y_qubits: usize,
    qubits: usize,
}

impl FactorInstance {
    /// Derives the register layout for an odd composite `number ≥ 9`.
    pub fn new(number: u64) -> Result<Self> {
        if number % 2 == 0 {
            return Err(Error::InvalidInstance { number, reason: "number is even" });
        }
        if number < 9 {
            return Err(Error::InvalidInstance { number, reason: "number is below 9" });
        }
        if is_prime(number) {
            return Err(Error::InvalidInstance { number, reason: "number is prime" });
        }
        let root = integer_sqrt(number);
        let odd_root = if root % 2 == 0 { root - 1 } else { root };
        let x_qubits = (bit_length(odd_root) - 1) as usize;
        let y_qubits = (bit_length(number / 3) - 1) as usize;
        Ok(Self {
            number,
            bit_length: bit_length(number),
            x_qubits,
            y_qubits,
            qubits: x_qubits + y_qubits,
        })
    }

    /// The number being factored.
    pub fn number(&self) -> u64 {
        self.number
    }

    /// Bit length of the number.
    pub fn bit_length(&self) -> u32 {
        self.bit_length
    }

    /// Qubits in the `x` register.
    pub fn x_qubits(&self) -> usize {
        self.x_qubits
    }

    /// Qubits in the `y` register.
    pub fn y_qubits(&self) -> usize {
        self.y_qubits
    }

    /// Total qubit count.
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    /// Size of the state space, `2^qubits`.
    pub fn dimension(&self) -> usize {
        1usize << self.qubits
    }

    /// Decodes a basis index into the odd trial factors `(x, y)`.
    ///
    /// Qubit 1 is the most significant bit of the index; the top `x_qubits`
    /// bits form `X'` and the remaining bits form `Y'`, with `x = 2·X' + 1`
    /// and `y = 2·Y' + 1`.
    pub fn decode(&self, index: usize) -> Result<(u64, u64)> {
        if index >= self.dimension() {
            return Err(Error::IndexOutOfRange { index, qubits: self.qubits });
        }
        let y_prime = index as u64 & ((1u64 << self.y_qubits) - 1);
        let x_prime = index as u64 >> self.y_qubits;
        Ok((2 * x_prime + 1, 2 * y_prime + 1))
    }

    /// Basis label in the register bit order, most significant qubit first.
    pub fn basis_label(&self, index: usize) -> String {
        (0..self.qubits)
            .map(|bit| if index >> (self.qubits - 1 - bit) & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

/// The `2^n` cost values `f(x(j), y(j))`, i.e. the problem-Hamiltonian diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostDiagonal {
    instance: FactorInstance,
    costs: Vec<u64>,
}

impl CostDiagonal {
    /// Evaluates `(N − x·y)²` over every basis state, exactly in integers.
    pub fn build(instance: &FactorInstance) -> Result<Self> {
        if instance.qubits > MAX_QUBITS {
            return Err(Error::QubitCountUnsupported { qubits: instance.qubits, max: MAX_QUBITS });
        }
        let n = instance.number as i128;
        let mut costs = Vec::with_capacity(instance.dimension());
        for index in 0..instance.dimension() {
            let (x, y) = instance.decode(index)?;
            let diff = n - (x as i128) * (y as i128);
            let cost = u64::try_from(diff * diff)
                .map_err(|_| Error::CostOverflow { number: instance.number })?;
            costs.push(cost);
        }
        Ok(Self { instance: instance.clone(), costs })
    }

    /// The instance this diagonal belongs to.
    pub fn instance(&self) -> &FactorInstance {
        &self.instance
    }

    /// All cost values, indexed by basis state.
    pub fn costs(&self) -> &[u64] {
        &self.costs
    }

    /// Number of basis states.
    pub fn dimension(&self) -> usize {
        self.costs.len()
    }

    /// Largest cost on the diagonal.
    pub fn max_cost(&self) -> u64 {
        self.costs.iter().copied().max().unwrap_or(0)
    }

    /// Basis states with zero cost, i.e. exact factorizations of `N`.
    pub fn solution_indices(&self) -> Vec<usize> {
        self.costs
            .iter()
            .enumerate()
            .filter_map(|(j, &c)| (c == 0).then_some(j))
            .collect()
    }
}

/// Exact expansion of a cost diagonal over `σ_z` tensor products.
///
/// Keys are subset bitmasks in the same bit layout as basis indices: bit
/// `n − i` of the mask selects qubit `i`, so for three qubits the mask
/// `0b100` is a lone `σ_z` on qubit 1. The empty subset is the identity
/// coefficient. Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliZExpansion {
    qubits: usize,
    terms: BTreeMap<u64, i64>,
}

impl PauliZExpansion {
    /// Walsh–Hadamard transform of the cost diagonal, divided by `2^n`.
    ///
    /// The division is exact: every register bit enters `x` and `y` with an
    /// even weight, which makes each degree-`k` monomial coefficient of the
    /// cost polynomial divisible by `2^k`.
    pub fn from_diagonal(diagonal: &CostDiagonal) -> Self {
        let values: Vec<i64> = diagonal.costs.iter().map(|&c| c as i64).collect();
        Self::from_integer_diagonal(&values)
            .expect("cost diagonals always have an integer expansion")
    }

    /// Expansion of an arbitrary integer diagonal, if one exists over the
    /// integers. The length must be a power of two.
    pub fn from_integer_diagonal(values: &[i64]) -> Result<Self> {
        if !values.len().is_power_of_two() {
            return Err(Error::InvalidParameter(
                "diagonal length must be a power of two".into(),
            ));
        }
        let qubits = values.len().trailing_zeros() as usize;
        let mut work: Vec<i128> = values.iter().map(|&v| v as i128).collect();
        walsh_transform(&mut work);
        let dimension = values.len() as i128;
        let mut terms = BTreeMap::new();
        for (mask, &w) in work.iter().enumerate() {
            if w % dimension != 0 {
                return Err(Error::InvalidParameter(
                    "diagonal has no integer sigma-z expansion".into(),
                ));
            }
            let coefficient = (w / dimension) as i64;
            if coefficient != 0 {
                terms.insert(mask as u64, coefficient);
            }
        }
        Ok(Self { qubits, terms })
    }

    /// Qubit count of the underlying register.
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    /// Coefficient of a qubit subset, zero if absent.
    pub fn coefficient(&self, mask: u64) -> i64 {
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&mask, &coeff)| (mask, coeff))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Evaluates the expansion on a basis state: each `σ_z` contributes `+1`
    /// on a 0 bit and `−1` on a 1 bit.
    pub fn evaluate(&self, index: usize) -> i64 {
        self.terms
            .iter()
            .map(|(&mask, &coeff)| {
                if (index as u64 & mask).count_ones() % 2 == 0 {
                    coeff
                } else {
                    -coeff
                }
            })
            .sum()
    }
}

fn check_budget(qubit_budget: usize) -> Result<()> {
    if qubit_budget < 2 || qubit_budget > MAX_ENUMERATION_QUBITS {
        return Err(Error::InvalidParameter(format!(
            "qubit budget must lie in 2..={MAX_ENUMERATION_QUBITS}, got {qubit_budget}"
        )));
    }
    Ok(())
}

/// All odd semiprimes whose register layout uses exactly `qubit_budget` qubits.
///
/// The `y` register bounds candidates by `N ≤ 3·2^budget + 2`, so the full
/// candidate set is enumerable.
pub fn instances_with_qubits(qubit_budget: usize) -> Result<Vec<u64>> {
    check_budget(qubit_budget)?;
    let upper = 3 * (1u64 << qubit_budget) + 2;
    let mut out = Vec::new();
    let mut n = 9u64;
    while n <= upper {
        if odd_semiprime_factors(n).is_some() {
            if let Ok(instance) = FactorInstance::new(n) {
                if instance.qubits == qubit_budget {
                    out.push(n);
                }
            }
        }
        n += 2;
    }
    Ok(out)
}

/// All odd semiprimes with the given bit length.
pub fn instances_with_bit_length(bits: u32) -> Result<Vec<u64>> {
    if !(4..=22).contains(&bits) {
        return Err(Error::InvalidParameter(format!(
            "bit length must lie in 4..=22, got {bits}"
        )));
    }
    let lower = 1u64 << (bits - 1);
    let upper = (1u64 << bits) - 1;
    let mut out = Vec::new();
    let mut n = lower + 1;
    while n <= upper {
        if odd_semiprime_factors(n).is_some() && FactorInstance::new(n).is_ok() {
            out.push(n);
        }
        n += 2;
    }
    Ok(out)
}

/// Draws one odd semiprime uniformly from the instances at `qubit_budget`
/// qubits. Deterministic for a fixed seed.
pub fn random_instance(qubit_budget: usize, seed: u64) -> Result<FactorInstance> {
    let pool = instances_with_qubits(qubit_budget)?;
    if pool.is_empty() {
        return Err(Error::NoInstanceExists { budget: qubit_budget });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FactorInstance::new(pool[rng.gen_range(0..pool.len())])
}

/// Samples up to `count` distinct instances at `qubit_budget` qubits,
/// without replacement. Returns fewer when the candidate pool is smaller.
pub fn sample_distinct_instances(
    qubit_budget: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<FactorInstance>> {
    let pool = instances_with_qubits(qubit_budget)?;
    if pool.is_empty() {
        return Err(Error::NoInstanceExists { budget: qubit_budget });
    }
    sample_from_pool(&pool, count, seed)
}

/// Samples without replacement from an explicit candidate pool.
pub fn sample_from_pool(pool: &[u64], count: usize, seed: u64) -> Result<Vec<FactorInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<u64> = pool.to_vec();
    candidates.shuffle(&mut rng);
    candidates.truncate(count);
    candidates.into_iter().map(FactorInstance::new).collect()
}
