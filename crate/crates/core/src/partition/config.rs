use crate::error::{Error, Result};

/// Which inter-part edges the Hamiltonicity compression keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum BlueStrategy {
    /// Every edge between two parts. Preserves Hamiltonicity unconditionally.
    #[default]
    All,
    /// A capped subset per pair of parts, at most `4(2Δ - 1)²` edges.
    Bounded,
}

/// Which vertices of each part the long-path compression keeps uncontracted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MarkStrategy {
    /// Mark every vertex: no contraction.
    #[default]
    Full,
    /// Mark endpoints of a few cross edges per neighboring part plus two
    /// extra vertices, capped at `(Δ + 1)^mark_exponent` per part.
    Bounded,
}

/// Knobs shared by the partition refinement and both solvers.
#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    /// Promised number of cliques per part of the greedy partition.
    pub kappa: usize,
    /// Requested linkedness of non-clique parts.
    pub lambda: usize,
    /// Separator size below which a part is split further.
    pub g_threshold: usize,
    /// Assert the structural relations between κ, λ, g and the quotient degree.
    pub theory_mode: bool,
    pub blue_strategy: BlueStrategy,
    pub mark_strategy: MarkStrategy,
    pub mark_exponent: u32,
    /// Dimension used by the pattern-covering exponents.
    pub dimension: usize,
    /// Pattern-cover radius cap multiplier: `R = ceil(c_r * k^(1/d))`.
    pub c_r: f64,
    /// Repetition schedule multiplier: `2^(c_rep * k^(1-1/d) * log2(k)^2)`.
    pub c_rep: f64,
    /// Hard cap on long-path repetitions.
    pub repetition_budget: u64,
    /// Outer cover radius cap multiplier: `ceil(outer_c * k * log2 k)`.
    pub outer_c: f64,
    /// Components of heuristic width at most `keep_width * k^(1-1/d) * log2 k`
    /// skip the pattern cover and enter the dynamic program whole.
    pub keep_width: f64,
    /// A long-path sample whose table overflows is redrawn with components
    /// wider than this pattern-covered regardless of `keep_width`.
    pub max_path_width: usize,
    /// Entry cap per dynamic-program table. The Hamiltonian solvers fail with a
    /// size-guard error above it; the long-path solver discards the sample.
    pub max_dp_states: usize,
    pub seed: u64,
}

/// Pattern-cover treewidth multiplier: the 99th percentile of
/// `width / (k^(1-1/d) log2 k)` over 500 calibration draws, rounded up to
/// two decimals. Reproduce with `cargo run --release -p linkpart-core --example calibrate_ctw`.
pub const CALIBRATED_C_TW: f64 = 0.50;

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            kappa: 3,
            lambda: 3,
            g_threshold: 8,
            theory_mode: false,
            blue_strategy: BlueStrategy::All,
            mark_strategy: MarkStrategy::Full,
            mark_exponent: 3,
            dimension: 2,
            c_r: 2.0,
            c_rep: 1.0,
            repetition_budget: 10_000,
            outer_c: 4.0,
            keep_width: 1.0,
            max_path_width: 9,
            max_dp_states: 200_000,
            seed: 0,
        }
    }
}

impl SolverConfig {
    /// Configuration with `g = max(κ + 3, 10) · 2λ` and theory checks on.
    pub fn theory(kappa: usize, lambda: usize) -> Self {
        SolverConfig {
            kappa,
            lambda,
            g_threshold: Self::theory_threshold(kappa, lambda),
            theory_mode: true,
            ..Self::default()
        }
    }

    pub fn theory_threshold(kappa: usize, lambda: usize) -> usize {
        (kappa + 3).max(10) * 2 * lambda
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda == 0 || self.g_threshold == 0 || self.kappa == 0 {
            return Err(Error::input("kappa, lambda and g_threshold must be positive"));
        }
        if self.dimension == 0 {
            return Err(Error::input("dimension must be positive"));
        }
        let reals = [self.c_r, self.c_rep, self.outer_c, self.keep_width];
        if reals.iter().any(|x| !x.is_finite() || *x <= 0.0) {
            return Err(Error::input("c_r, c_rep, outer_c and keep_width must be positive and finite"));
        }
        if self.repetition_budget == 0 || self.max_dp_states == 0 {
            return Err(Error::input("repetition budget and table cap must be at least 1"));
        }
        if self.theory_mode && self.g_threshold != Self::theory_threshold(self.kappa, self.lambda) {
            return Err(Error::ContractViolation(alloc::format!(
                "theory mode needs g_threshold = max(kappa + 3, 10) * 2 * lambda = {}",
                Self::theory_threshold(self.kappa, self.lambda)
            )));
        }
        Ok(())
    }
}
