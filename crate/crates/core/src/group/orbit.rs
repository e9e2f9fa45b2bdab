//! Brute-force orbit enumeration by breadth-first search.
//!
//! A state is a tuple of points; a generator acts on every entry. The orbit
//! of `(0, 1, ..., m-1)` is in bijection with the group itself, which makes
//! this the independent oracle for stabilizer-chain orders. Shorter tuples
//! measure how transitive the action is.
//!
//! With the `parallel` feature each BFS layer is expanded with rayon; the
//! visited set is merged in a fixed order, so the orbit is identical to the
//! sequential one.

use std::collections::HashSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::deck::Permutation;
use crate::error::{Error, Result};

pub type State = Box<[u16]>;

fn step(g: &Permutation, state: &[u16]) -> State {
    state.iter().map(|&x| g.image(x as usize) as u16).collect()
}

fn check_degree(generators: &[Permutation], start: &[u16]) {
    if let Some(g) = generators.first() {
        assert!(
            generators.iter().all(|h| h.len() == g.len()),
            "generator degree mismatch"
        );
        assert!(
            start.iter().all(|&x| (x as usize) < g.len()),
            "start point out of range"
        );
        assert!(
            g.len() <= u16::MAX as usize + 1,
            "too many points for a u16 state"
        );
    }
}

/// Size of the orbit of `start`, refusing once more than `cap` states
/// have been seen.
pub fn orbit_size(generators: &[Permutation], start: &[u16], cap: usize) -> Result<usize> {
    #[cfg(feature = "parallel")]
    {
        orbit_size_parallel(generators, start, cap)
    }
    #[cfg(not(feature = "parallel"))]
    {
        orbit_size_sequential(generators, start, cap)
    }
}

pub fn orbit_size_sequential(
    generators: &[Permutation],
    start: &[u16],
    cap: usize,
) -> Result<usize> {
    check_degree(generators, start);
    let start: State = start.into();
    let mut seen: HashSet<State> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for state in &frontier {
            for g in generators {
                let s = step(g, state);
                if !seen.contains(&s) {
                    seen.insert(s.clone());
                    next.push(s);
                    if seen.len() > cap {
                        return Err(Error::NodeCap(cap));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

#[cfg(feature = "parallel")]
pub fn orbit_size_parallel(generators: &[Permutation], start: &[u16], cap: usize) -> Result<usize> {
    check_degree(generators, start);
    let start: State = start.into();
    let mut seen: HashSet<State> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let candidates: Vec<State> = frontier
            .par_iter()
            .flat_map_iter(|state| generators.iter().map(move |g| step(g, state)))
            .filter(|s| !seen.contains(s))
            .collect();
        let mut next = Vec::new();
        // candidates can still repeat within the layer
        for s in candidates {
            if !seen.contains(&s) {
                seen.insert(s.clone());
                next.push(s);
                if seen.len() > cap {
                    return Err(Error::NodeCap(cap));
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

/// Order of the group generated by `generators` on `degree` points, by
/// enumerating every element.
pub fn enumerate_group_order(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<usize> {
    let start: Vec<u16> = (0..degree as u16).collect();
    orbit_size(generators, &start, cap)
}
