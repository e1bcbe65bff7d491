/// Resource caps and the seed for randomized sifting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest degree accepted for user-constructed groups.
    pub max_degree: usize,
    /// Largest group order accepted anywhere.
    pub max_order: u64,
    /// Largest order for which the element table and subgroup lattice are built.
    pub max_lattice_order: u64,
    /// Seed for the random phase of Schreier–Sims.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_degree: 64,
            max_order: 1_000_000,
            max_lattice_order: 2048,
            seed: 0x5eed_cafe,
        }
    }
}

impl Config {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Same caps, no degree limit. Used for groups built internally
    /// (coset actions, regular representations).
    pub(crate) fn internal(self) -> Self {
        Config { max_degree: usize::MAX, ..self }
    }
}
