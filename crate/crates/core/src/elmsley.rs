//! Shortest in/out shuffle sequences that move a card between positions.
//!
//! Only the position of one card matters, so the search runs on a graph
//! with one node per position and two labelled edges per node. All minimal
//! words are recovered by unwinding the BFS predecessor DAG.

use std::fmt::Write as _;

use crate::deck::check_size;
use crate::error::{Error, Result};
use crate::shuffle::{Family, ShuffleWord, Side};

/// Upper bound on the number of minimal words returned per query.
pub const MAX_WORDS: usize = 10_000;

/// Where one card goes under each shuffle of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionGraph {
    size: usize,
    family: Family,
    in_edges: Vec<usize>,
    out_edges: Vec<usize>,
}

impl PositionGraph {
    pub fn new(size: usize, family: Family) -> Result<Self> {
        let edges = |side: Side| -> Result<Vec<usize>> {
            let e = family.shuffle(side).element(size)?;
            Ok((0..size).map(|p| e.perm().image(p)).collect())
        };
        Ok(PositionGraph {
            size,
            family,
            in_edges: edges(Side::In)?,
            out_edges: edges(Side::Out)?,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn next(&self, position: usize, side: Side) -> usize {
        match side {
            Side::In => self.in_edges[position],
            Side::Out => self.out_edges[position],
        }
    }

    /// Follows `sides` from `position`.
    pub fn walk(&self, position: usize, sides: &[Side]) -> usize {
        sides.iter().fold(position, |p, &s| self.next(p, s))
    }

    /// BFS distances from `from`; `None` for unreachable positions.
    pub fn distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.size];
        dist[from] = Some(0);
        let mut frontier = vec![from];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &p in &frontier {
                for side in [Side::In, Side::Out] {
                    let q = self.next(p, side);
                    if dist[q].is_none() {
                        dist[q] = Some(d);
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        dist
    }
}

/// Every minimal word between two positions, sorted with `in < out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub from: usize,
    pub to: usize,
    pub length: usize,
    pub words: Vec<Vec<Side>>,
    /// Set when [`MAX_WORDS`] cut the enumeration short.
    pub truncated: bool,
}

impl SolutionSet {
    pub fn shuffle_words(&self, family: Family) -> Vec<ShuffleWord> {
        self.words.iter().map(|w| family.word(w)).collect()
    }

    /// One line per word, tokens separated by `, `. The empty word renders
    /// as `(empty)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for w in &self.words {
            let _ = writeln!(out, "{}", render_sides(w));
        }
        out
    }
}

pub fn render_sides(sides: &[Side]) -> String {
    if sides.is_empty() {
        return "(empty)".to_string();
    }
    sides
        .iter()
        .map(|s| s.token())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn shortest_words(size: usize, family: Family, from: usize, to: usize) -> Result<SolutionSet> {
    check_size(size)?;
    for position in [from, to] {
        if position >= size {
            return Err(Error::PositionOutOfRange { position, size });
        }
    }
    let graph = PositionGraph::new(size, family)?;
    let dist = graph.distances(from);
    let length = dist[to].ok_or(Error::Unreachable { from, to })?;

    // predecessors[q] lists (p, side) with dist[p] + 1 == dist[q]
    let mut predecessors: Vec<Vec<(usize, Side)>> = vec![Vec::new(); size];
    for p in 0..size {
        let Some(dp) = dist[p] else { continue };
        for side in [Side::In, Side::Out] {
            let q = graph.next(p, side);
            if dist[q] == Some(dp + 1) {
                predecessors[q].push((p, side));
            }
        }
    }

    let mut words = Vec::new();
    let mut suffix = Vec::with_capacity(length);
    let truncated = !unwind(&predecessors, from, to, &mut suffix, &mut words);
    for w in &mut words {
        w.reverse();
    }
    words.sort();
    Ok(SolutionSet {
        from,
        to,
        length,
        words,
        truncated,
    })
}

/// Depth-first walk back from `node`; returns false once the cap is hit.
fn unwind(
    predecessors: &[Vec<(usize, Side)>],
    from: usize,
    node: usize,
    suffix: &mut Vec<Side>,
    words: &mut Vec<Vec<Side>>,
) -> bool {
    if node == from {
        if words.len() >= MAX_WORDS {
            return false;
        }
        words.push(suffix.clone());
        return true;
    }
    for &(p, side) in &predecessors[node] {
        suffix.push(side);
        let ok = unwind(predecessors, from, p, suffix, words);
        suffix.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Positions visited by the second card of a `2^k` deck under repeated
/// out horseshoe shuffles: `1, 2, 4, ..., 2^(k-1), 2^k - 1`, after which it
/// returns to 1.
pub fn second_position_cycle(size: usize) -> Result<Vec<usize>> {
    if size < 4 || !size.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(size, 4));
    }
    let graph = PositionGraph::new(size, Family::Horseshoe)?;
    let mut cycle = vec![1];
    let mut p = graph.next(1, Side::Out);
    while p != 1 {
        cycle.push(p);
        p = graph.next(p, Side::Out);
    }
    Ok(cycle)
}
