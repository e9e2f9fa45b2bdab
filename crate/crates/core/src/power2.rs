//! Special orderings of `2^k`-card decks.
//!
//! Card values are `k`-bit numbers. The diagram is a cycle of `k + 1`
//! operations: flip bit 0, flip bit 1, ..., flip bit `k-1`, complement, and
//! back to flip bit 0. A special ordering starts from one card and doubles
//! `k` times; each doubling appends a copy of the cards so far with the
//! next diagram operation applied. Exactly one operation of the cycle goes
//! unused, and it is the one relating the two end cards.
//!
//! Horseshoe, milk and Monge shuffles and reversing the deck all map special
//! orderings to special orderings, which is what [`trick_session`] checks
//! and what [`predict_from_ends`] exploits.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::deck::identity_deck;
use crate::error::{Error, Result};
use crate::shuffle::{Move, ShuffleKind, ShuffleWord};

pub const MAX_BITS: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramOp {
    FlipBit(u32),
    Complement,
}

fn check_bits(k: u32) -> Result<()> {
    if (1..=MAX_BITS).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidBits(k))
    }
}

fn check_value(value: u32, k: u32) -> Result<()> {
    if value >> k == 0 {
        Ok(())
    } else {
        Err(Error::ValueOutOfRange { value, bits: k })
    }
}

impl DiagramOp {
    pub fn mask(self, k: u32) -> u32 {
        match self {
            DiagramOp::FlipBit(j) => 1 << j,
            DiagramOp::Complement => (1 << k) - 1,
        }
    }

    pub fn apply(self, value: u32, k: u32) -> u32 {
        value ^ self.mask(k)
    }

    fn index(self, k: u32) -> u32 {
        match self {
            DiagramOp::FlipBit(j) => j,
            DiagramOp::Complement => k,
        }
    }

    fn from_index(i: u32, k: u32) -> Self {
        if i == k {
            DiagramOp::Complement
        } else {
            DiagramOp::FlipBit(i)
        }
    }

    pub fn validate(self, k: u32) -> Result<()> {
        check_bits(k)?;
        match self {
            DiagramOp::FlipBit(j) if j >= k => Err(Error::InvalidOp {
                op: self.to_string(),
                bits: k,
            }),
            _ => Ok(()),
        }
    }

    pub fn next(self, k: u32) -> Self {
        Self::from_index((self.index(k) + 1) % (k + 1), k)
    }

    pub fn previous(self, k: u32) -> Self {
        Self::from_index((self.index(k) + k) % (k + 1), k)
    }

    /// The whole diagram, starting at flip bit 0.
    pub fn cycle(k: u32) -> Vec<DiagramOp> {
        (0..=k).map(|i| Self::from_index(i, k)).collect()
    }
}

impl fmt::Display for DiagramOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramOp::FlipBit(j) => write!(f, "bit-{j}"),
            DiagramOp::Complement => f.write_str("complement"),
        }
    }
}

impl FromStr for DiagramOp {
    type Err = Error;

    /// `complement`, or `bit-J` for flipping the `2^J` bit.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "complement" {
            return Ok(DiagramOp::Complement);
        }
        lower
            .strip_prefix("bit-")
            .and_then(|j| j.parse().ok())
            .map(DiagramOp::FlipBit)
            .ok_or_else(|| Error::Parse(format!("unknown diagram operation {s:?}")))
    }
}

/// A generated ordering together with how it was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialOrdering {
    pub k: u32,
    pub first: u32,
    pub start: DiagramOp,
    pub values: Vec<u32>,
}

impl SpecialOrdering {
    /// The diagram operation not used while doubling; it relates the two
    /// end cards.
    pub fn skipped(&self) -> DiagramOp {
        self.start.previous(self.k)
    }

    /// The `k` operations used, in order.
    pub fn ops(&self) -> Vec<DiagramOp> {
        let mut op = self.start;
        (0..self.k)
            .map(|_| {
                let cur = op;
                op = op.next(self.k);
                cur
            })
            .collect()
    }
}

/// Doubles `[first]` `k` times using consecutive diagram operations from
/// `start`.
pub fn generate(k: u32, first: u32, start: DiagramOp) -> Result<SpecialOrdering> {
    start.validate(k)?;
    check_value(first, k)?;
    let mut values = Vec::with_capacity(1 << k);
    values.push(first);
    let mut op = start;
    for _ in 0..k {
        let mask = op.mask(k);
        values.extend_from_within(..);
        let half = values.len() / 2;
        for v in &mut values[half..] {
            *v ^= mask;
        }
        op = op.next(k);
    }
    Ok(SpecialOrdering {
        k,
        first,
        start,
        values,
    })
}

/// Finds how `values` was generated, or `None` when it is not special.
/// The first card is always `values[0]`, so only the start is searched.
pub fn recognize(values: &[u32]) -> Result<Option<SpecialOrdering>> {
    let len = values.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len, 2));
    }
    let k = len.trailing_zeros();
    check_bits(k)?;
    if values[0] >> k != 0 {
        return Ok(None);
    }
    for start in DiagramOp::cycle(k) {
        let candidate = generate(k, values[0], start)?;
        if candidate.values == values {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// Reconstructs the whole ordering from its end cards.
///
/// The ends differ by exactly the skipped operation: one bit, or all bits
/// when they sum to `2^k - 1`. Doubling starts with the operation after it.
/// For `k = 1` the two readings coincide.
pub fn predict_from_ends(k: u32, left: u32, right: u32) -> Result<SpecialOrdering> {
    check_bits(k)?;
    check_value(left, k)?;
    check_value(right, k)?;
    let diff = left ^ right;
    let skipped = if diff.is_power_of_two() {
        DiagramOp::FlipBit(diff.trailing_zeros())
    } else if diff == DiagramOp::Complement.mask(k) {
        DiagramOp::Complement
    } else {
        return Err(Error::InvalidEnds { left, right });
    };
    generate(k, left, skipped.next(k))
}

/// Card faces for the trick: 0 shows as the packet size and 1 as `A`.
pub fn display_card(value: u32, k: u32) -> String {
    match value {
        0 => (1u32 << k).to_string(),
        1 => "A".to_string(),
        v => v.to_string(),
    }
}

pub fn display_cards(values: &[u32], k: u32) -> String {
    values
        .iter()
        .map(|&v| display_card(v, k))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Reads a card face back: `A` is 1 and the packet size is 0. Plain `0`
/// and `1` are accepted too.
pub fn parse_card(token: &str, k: u32) -> Result<u32> {
    check_bits(k)?;
    let size = 1u32 << k;
    if token.eq_ignore_ascii_case("a") {
        return Ok(1);
    }
    let v: u32 = token
        .parse()
        .map_err(|_| Error::Parse(format!("bad card {token:?}")))?;
    match v {
        v if v == size => Ok(0),
        v if v < size => Ok(v),
        v => Err(Error::ValueOutOfRange { value: v, bits: k }),
    }
}

/// Positions in the order the trick reveals them: the two ends, then the
/// next pair in, and so on.
pub fn reveal_order(len: usize) -> Vec<usize> {
    (0..len / 2).flat_map(|i| [i, len - 1 - i]).collect()
}

pub fn is_trick_move(m: Move) -> bool {
    matches!(
        m.kind,
        ShuffleKind::HorseIn
            | ShuffleKind::HorseOut
            | ShuffleKind::Milk
            | ShuffleKind::MilkSwap
            | ShuffleKind::MongeUnder
            | ShuffleKind::MongeOver
            | ShuffleKind::Reverse
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrickStep {
    pub applied: Move,
    pub values: Vec<u32>,
    pub ordering: SpecialOrdering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrickTranscript {
    pub k: u32,
    pub initial: Vec<u32>,
    pub steps: Vec<TrickStep>,
    /// How the final deck is built, found by search.
    pub recognized: SpecialOrdering,
    /// The same ordering rebuilt from its two end cards alone.
    pub prediction: SpecialOrdering,
}

impl TrickTranscript {
    pub fn final_values(&self) -> &[u32] {
        &self.prediction.values
    }

    /// One line per revealed card, outside in, then the full ordering.
    pub fn render(&self) -> String {
        let values = self.final_values();
        let mut out = String::new();
        for p in reveal_order(values.len()) {
            let _ = writeln!(out, "position {p}: {}", display_card(values[p], self.k));
        }
        let _ = writeln!(out, "ordering: {}", display_cards(values, self.k));
        out
    }
}

/// Shuffles the sorted `2^k` packet with `word`, checking after every move
/// that the ordering is still special, then predicts the final deck from
/// its ends.
pub fn trick_session(k: u32, word: &ShuffleWord) -> Result<TrickTranscript> {
    check_bits(k)?;
    if let Some(m) = word.moves().iter().find(|m| !is_trick_move(**m)) {
        return Err(Error::NotInTrickAlphabet(m.to_string()));
    }
    let size = 1usize << k;
    let mut deck = identity_deck(size)?;
    let initial = deck.labels();
    if recognize(&initial)?.is_none() {
        return Err(Error::ClosureViolation("the sorted packet".into()));
    }
    let mut steps = Vec::with_capacity(word.len());
    for (i, &m) in word.moves().iter().enumerate() {
        deck = deck.apply(&m.element(size)?)?;
        let values = deck.labels();
        let ordering = recognize(&values)?
            .ok_or_else(|| Error::ClosureViolation(format!("move {} ({m})", i + 1)))?;
        steps.push(TrickStep {
            applied: m,
            values,
            ordering,
        });
    }
    let values = deck.labels();
    let recognized =
        recognize(&values)?.ok_or_else(|| Error::ClosureViolation("the final deck".into()))?;
    let prediction = predict_from_ends(k, values[0], values[size - 1])?;
    if prediction.values != values {
        return Err(Error::ClosureViolation(
            "prediction from the end cards".into(),
        ));
    }
    Ok(TrickTranscript {
        k,
        initial,
        steps,
        recognized,
        prediction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERING: [u32; 16] = [11, 15, 3, 7, 4, 0, 12, 8, 10, 14, 2, 6, 5, 1, 13, 9];

    #[test]
    fn doubling_from_eleven() {
        let o = generate(4, 0b1011, DiagramOp::FlipBit(2)).unwrap();
        assert_eq!(o.values, ORDERING);
        assert_eq!(
            o.ops(),
            [
                DiagramOp::FlipBit(2),
                DiagramOp::FlipBit(3),
                DiagramOp::Complement,
                DiagramOp::FlipBit(0)
            ]
        );
        assert_eq!(o.skipped(), DiagramOp::FlipBit(1));
    }

    #[test]
    fn small_generations() {
        assert_eq!(
            generate(1, 0, DiagramOp::FlipBit(0)).unwrap().values,
            [0, 1]
        );
        assert_eq!(
            generate(3, 4, DiagramOp::FlipBit(2)).unwrap().values,
            [4, 0, 3, 7, 5, 1, 2, 6]
        );
        assert!(generate(3, 4, DiagramOp::FlipBit(3)).is_err());
        assert!(generate(3, 8, DiagramOp::Complement).is_err());
        assert!(generate(0, 0, DiagramOp::Complement).is_err());
        assert!(generate(17, 0, DiagramOp::Complement).is_err());
    }

    #[test]
    fn recognition() {
        let o = recognize(&ORDERING).unwrap().unwrap();
        assert_eq!((o.first, o.start), (11, DiagramOp::FlipBit(2)));
        let reversed: Vec<u32> = ORDERING.iter().rev().copied().collect();
        let r = recognize(&reversed).unwrap().unwrap();
        assert_eq!((r.first, r.start), (0b1001, DiagramOp::FlipBit(2)));
        let id = recognize(&[0, 1, 2, 3]).unwrap().unwrap();
        assert_eq!((id.first, id.start), (0, DiagramOp::FlipBit(0)));
        assert_eq!(recognize(&[0, 1, 3, 2]).unwrap(), None);
        assert_eq!(recognize(&[0, 1, 2]), Err(Error::NotPowerOfTwo(3, 2)));
    }

    #[test]
    fn predictions() {
        let p = predict_from_ends(3, 4, 6).unwrap();
        assert_eq!(display_cards(&p.values, 3), "4 8 3 7 5 A 2 6");
        assert_eq!(predict_from_ends(4, 11, 9).unwrap().values, ORDERING);
        let c = predict_from_ends(3, 0, 7).unwrap();
        assert_eq!(
            c.values,
            generate(3, 0, DiagramOp::FlipBit(0)).unwrap().values
        );
        assert_eq!(c.skipped(), DiagramOp::Complement);
        assert_eq!(
            predict_from_ends(3, 0, 3),
            Err(Error::InvalidEnds { left: 0, right: 3 })
        );
        assert_eq!(predict_from_ends(1, 1, 0).unwrap().values, [1, 0]);
    }

    #[test]
    fn diagram_cycle_wraps() {
        assert_eq!(DiagramOp::Complement.next(3), DiagramOp::FlipBit(0));
        assert_eq!(DiagramOp::FlipBit(0).previous(3), DiagramOp::Complement);
        assert_eq!(DiagramOp::FlipBit(2).next(3), DiagramOp::Complement);
        assert_eq!("bit-2".parse::<DiagramOp>().unwrap(), DiagramOp::FlipBit(2));
        assert_eq!(
            "Complement".parse::<DiagramOp>().unwrap(),
            DiagramOp::Complement
        );
        assert!("bit-x".parse::<DiagramOp>().is_err());
    }

    #[test]
    fn card_faces() {
        assert_eq!(parse_card("8", 3).unwrap(), 0);
        assert_eq!(parse_card("A", 3).unwrap(), 1);
        assert_eq!(parse_card("0", 3).unwrap(), 0);
        assert_eq!(parse_card("6", 3).unwrap(), 6);
        assert!(parse_card("9", 3).is_err());
        assert_eq!(reveal_order(8), [0, 7, 1, 6, 2, 5, 3, 4]);
    }

    #[test]
    fn trick_sessions() {
        let t = trick_session(3, &ShuffleWord::empty()).unwrap();
        assert_eq!(t.final_values(), [0, 1, 2, 3, 4, 5, 6, 7]);
        let word: ShuffleWord = "horse-in milk reverse monge-over".parse().unwrap();
        let t = trick_session(3, &word).unwrap();
        assert_eq!(t.steps.len(), 4);
        assert_eq!(t.recognized, t.prediction);
        assert!(t.render().ends_with(&format!(
            "ordering: {}\n",
            display_cards(t.final_values(), 3)
        )));
        assert_eq!(t.render().lines().count(), 9);
        assert!(matches!(
            trick_session(3, &"faro-in".parse().unwrap()),
            Err(Error::NotInTrickAlphabet(_))
        ));
    }
}
