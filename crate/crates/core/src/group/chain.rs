//! Deterministic Schreier–Sims.
//!
//! Base points are chosen in ascending order as generators need them and
//! transversals are stored as full elements together with their inverses.
//! Every group handled here acts on at most a few hundred points, so the
//! quadratic memory of element transversals is not a concern.

use num_bigint::BigUint;
use num_traits::One;

use crate::deck::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
    transversal_inv: Vec<Option<Permutation>>,
    /// Schreier generators already verified for `orbit[a]` use
    /// `generators[..checked[a]]`.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut transversal_inv = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        transversal_inv[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            transversal,
            transversal_inv,
            checked: vec![0],
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        let old_len = self.orbit.len();
        self.generators.push(g);
        let newest = self.generators.len() - 1;
        let mut q = 0;
        while q < self.orbit.len() {
            let x = self.orbit[q];
            // old points only need the new generator
            let from = if q < old_len { newest } else { 0 };
            for gi in from..self.generators.len() {
                let gen = &self.generators[gi];
                let y = gen.image(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().expect("orbit point").then(gen);
                    self.transversal_inv[y] = Some(u.inverse());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                    self.checked.push(0);
                }
            }
            q += 1;
        }
    }
}

/// Base, basic orbits with transversals, and strong generators of a
/// permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

/// Builds a stabilizer chain for the group generated by `generators`, all
/// acting on `degree` points.
pub fn schreier_sims(degree: usize, generators: &[Permutation]) -> StabilizerChain {
    let mut chain = StabilizerChain {
        degree,
        levels: Vec::new(),
    };
    for g in generators {
        assert_eq!(g.len(), degree, "generator degree mismatch");
        if g.is_identity() {
            continue;
        }
        let base = chain.base();
        if base.iter().all(|&b| g.image(b) == b) {
            let p = g.first_moved().expect("non-identity");
            chain.levels.push(Level::new(p, degree));
        }
    }
    for g in generators.iter().filter(|g| !g.is_identity()) {
        for level in chain.levels.iter_mut() {
            let fixes_earlier = level.base_point;
            level.add_generator(g.clone());
            if g.image(fixes_earlier) != fixes_earlier {
                break;
            }
        }
    }

    let mut i = chain.levels.len() as isize - 1;
    while i >= 0 {
        let level = i as usize;
        match chain.find_failing_schreier_generator(level) {
            Some((residue, stop)) => {
                if stop == chain.levels.len() {
                    let p = residue.first_moved().expect("non-identity residue");
                    chain.levels.push(Level::new(p, degree));
                }
                for l in level + 1..=stop {
                    chain.levels[l].add_generator(residue.clone());
                }
                i = stop as isize;
            }
            None => i -= 1,
        }
    }
    chain
}

impl StabilizerChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Basic orbit of the `level`-th base point.
    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Product of the basic orbit sizes.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Divides `g` by transversal elements from `start` downwards. Returns
    /// the residue and the level where sifting stopped (`levels.len()` when
    /// it passed every level).
    pub fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.base_point);
            match &level.transversal_inv[beta] {
                Some(u_inv) => g = g.then(u_inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g, 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.len() != self.degree {
            return false;
        }
        let (residue, stop) = self.sift(g);
        stop == self.levels.len() && residue.is_identity()
    }

    fn find_failing_schreier_generator(&mut self, level: usize) -> Option<(Permutation, usize)> {
        let mut a = 0;
        while a < self.levels[level].orbit.len() {
            while self.levels[level].checked[a] < self.levels[level].generators.len() {
                let lv = &self.levels[level];
                let beta = lv.orbit[a];
                let x = &lv.generators[lv.checked[a]];
                let image = x.image(beta);
                let h = lv.transversal[beta]
                    .as_ref()
                    .expect("orbit point")
                    .then(x)
                    .then(lv.transversal_inv[image].as_ref().expect("orbit closed"));
                if !h.is_identity() {
                    let (residue, stop) = self.sift_from(&h, level + 1);
                    if stop < self.levels.len() || !residue.is_identity() {
                        return Some((residue, stop));
                    }
                }
                self.levels[level].checked[a] += 1;
            }
            a += 1;
        }
        None
    }
}
