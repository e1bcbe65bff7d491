//! Base and strong generating set via Schreier–Sims.
//!
//! A seeded random phase sifts product-replacement elements to populate the
//! stabilizer chain quickly; a deterministic pass over all Schreier
//! generators then completes and certifies it. The resulting order is exact
//! regardless of the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse_transversal: vec![None; degree],
        };
        level.recompute_orbit(degree);
        level
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.inverse_transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.inverse_transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap() * s;
                    self.inverse_transversal[c] = Some(u.inverse());
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn build(degree: usize, gens: &[Permutation], config: &Config) -> Result<Bsgs> {
        let mut chain = Bsgs { degree, levels: Vec::new() };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return Ok(chain);
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let p = g.first_moved().unwrap();
                chain.levels.push(Level::new(p, degree));
            }
        }
        for i in 0..chain.levels.len() {
            let fixed: Vec<usize> = chain.levels[..i].iter().map(|l| l.point).collect();
            chain.levels[i].gens =
                gens.iter().filter(|g| fixed.iter().all(|&p| g.apply(p) == p)).cloned().collect();
            chain.levels[i].recompute_orbit(degree);
        }
        chain.check_cap(config)?;
        chain.random_phase(&gens, config)?;
        chain.deterministic_phase(config)?;
        Ok(chain)
    }

    fn check_cap(&self, config: &Config) -> Result<()> {
        let mut order: u64 = 1;
        for l in &self.levels {
            order = order.saturating_mul(l.orbit.len() as u64);
        }
        if order > config.max_order {
            return Err(Error::Resource { what: "group order", value: order, cap: config.max_order });
        }
        Ok(())
    }

    fn random_phase(&mut self, gens: &[Permutation], config: &Config) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut state: Vec<Permutation> = gens.iter().cycle().take(gens.len().max(10)).cloned().collect();
        let mut accumulator = Permutation::identity(self.degree);
        for _ in 0..50 {
            Self::product_replacement(&mut rng, &mut state, &mut accumulator);
        }
        let mut quiet = 0;
        let mut rounds = 0;
        while quiet < 24 && rounds < 2000 {
            rounds += 1;
            Self::product_replacement(&mut rng, &mut state, &mut accumulator);
            let (residue, drop) = self.strip(&accumulator, 0);
            if drop < self.levels.len() || !residue.is_identity() {
                self.add_residue(residue, 0, drop);
                self.check_cap(config)?;
                quiet = 0;
            } else {
                quiet += 1;
            }
        }
        Ok(())
    }

    fn product_replacement(
        rng: &mut ChaCha8Rng,
        state: &mut [Permutation],
        accumulator: &mut Permutation,
    ) {
        let n = state.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        state[i] = if rng.gen_bool(0.5) { &state[i] * &state[j] } else { &state[j] * &state[i] };
        *accumulator = &*accumulator * &state[i];
    }

    /// Adds `residue` (which fixes the first `drop` base points) to the
    /// generating sets of levels `first..=drop`, extending the base if needed.
    fn add_residue(&mut self, residue: Permutation, first: usize, drop: usize) {
        if drop == self.levels.len() {
            let p = residue.first_moved().expect("residue must be non-trivial");
            self.levels.push(Level::new(p, self.degree));
        }
        for l in first..=drop {
            self.levels[l].gens.push(residue.clone());
            self.levels[l].recompute_orbit(self.degree);
        }
    }

    fn deterministic_phase(&mut self, config: &Config) -> Result<()> {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart = None;
            let orbit = self.levels[iu].orbit.clone();
            let gens = self.levels[iu].gens.clone();
            'scan: for &b in &orbit {
                for s in &gens {
                    let c = s.apply(b);
                    let ub = self.levels[iu].transversal[b].as_ref().unwrap();
                    let uc_inv = self.levels[iu].inverse_transversal[c].as_ref().unwrap();
                    let h = &(ub * s) * uc_inv;
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.strip(&h, iu + 1);
                    if drop < self.levels.len() || !residue.is_identity() {
                        self.add_residue(residue, iu + 1, drop);
                        self.check_cap(config)?;
                        restart = Some(drop);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        Ok(())
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let b = h.apply(level.point);
            match &level.inverse_transversal[b] {
                None => return (h, l),
                Some(u_inv) => h = &h * u_inv,
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, drop) = self.strip(g, 0);
        drop == self.levels.len() && residue.is_identity()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// All group elements, as products of transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elements = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.orbit.len());
            for h in &elements {
                for &b in &level.orbit {
                    next.push(h * level.transversal[b].as_ref().unwrap());
                }
            }
            elements = next;
        }
        elements
    }
}
