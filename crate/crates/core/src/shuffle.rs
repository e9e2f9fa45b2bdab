//! Every perfect-shuffle family as an [`OrientedPermutation`].
//!
//! A deck of `2n` cards is cut into a top half `0..n` and a bottom half
//! `n..2n`. Faro shuffles interlace the halves as they are, flip shuffles
//! turn the bottom half over first (reversing it and flipping each card),
//! and horseshoe shuffles only reverse it. "Out" keeps the first card of the
//! top half outermost, "in" puts it second.
//!
//! The milk shuffle slides the top and bottom cards off together, top card
//! above, onto a growing pile; `MilkSwap` swaps each pair first. Both are
//! horseshoe shuffles conjugated by turning the deck over. The Monge
//! shuffles feed cards alternately under and over a growing packet and are
//! the inverses of the two milk shuffles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::deck::{check_size, Deck, OrientedPermutation, Permutation};
use crate::error::{Error, Result};

pub use crate::deck::is_staystack;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShuffleKind {
    FaroOut,
    FaroIn,
    FlipOut,
    FlipIn,
    HorseOut,
    HorseIn,
    Milk,
    MilkSwap,
    MongeUnder,
    MongeOver,
    Reverse,
    TurnOver,
}

impl ShuffleKind {
    pub const ALL: [ShuffleKind; 12] = [
        ShuffleKind::FaroOut,
        ShuffleKind::FaroIn,
        ShuffleKind::FlipOut,
        ShuffleKind::FlipIn,
        ShuffleKind::HorseOut,
        ShuffleKind::HorseIn,
        ShuffleKind::Milk,
        ShuffleKind::MilkSwap,
        ShuffleKind::MongeUnder,
        ShuffleKind::MongeOver,
        ShuffleKind::Reverse,
        ShuffleKind::TurnOver,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ShuffleKind::FaroOut => "faro-out",
            ShuffleKind::FaroIn => "faro-in",
            ShuffleKind::FlipOut => "flip-out",
            ShuffleKind::FlipIn => "flip-in",
            ShuffleKind::HorseOut => "horse-out",
            ShuffleKind::HorseIn => "horse-in",
            ShuffleKind::Milk => "milk",
            ShuffleKind::MilkSwap => "milk-swap",
            ShuffleKind::MongeUnder => "monge-under",
            ShuffleKind::MongeOver => "monge-over",
            ShuffleKind::Reverse => "reverse",
            ShuffleKind::TurnOver => "turnover",
        }
    }

    /// The shuffle as a group element on a deck of `size` cards.
    pub fn element(self, size: usize) -> Result<OrientedPermutation> {
        check_size(size)?;
        let n = size / 2;
        let element = match self {
            ShuffleKind::FaroOut => OrientedPermutation::unflipped(faro_out(size)),
            ShuffleKind::FaroIn => OrientedPermutation::unflipped(faro_in(size)),
            ShuffleKind::FlipOut => reversed_bottom(n, Side::Out, true),
            ShuffleKind::FlipIn => reversed_bottom(n, Side::In, true),
            ShuffleKind::HorseOut => reversed_bottom(n, Side::Out, false),
            ShuffleKind::HorseIn => reversed_bottom(n, Side::In, false),
            ShuffleKind::Milk => conjugate_by_turnover(&reversed_bottom(n, Side::Out, false)),
            ShuffleKind::MilkSwap => conjugate_by_turnover(&reversed_bottom(n, Side::In, false)),
            ShuffleKind::MongeUnder => ShuffleKind::Milk.element(size)?.inverse(),
            ShuffleKind::MongeOver => ShuffleKind::MilkSwap.element(size)?.inverse(),
            ShuffleKind::Reverse => OrientedPermutation::unflipped(reversal(size)),
            ShuffleKind::TurnOver => turnover(size),
        };
        Ok(element)
    }
}

impl fmt::Display for ShuffleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Position `i < 2n-1` goes to `2i mod (2n-1)`; the bottom card stays put.
fn faro_out(size: usize) -> Permutation {
    let modulus = size - 1;
    let images = (0..size)
        .map(|i| if i == modulus { i } else { (2 * i) % modulus } as u32)
        .collect();
    Permutation::from_images_unchecked(images)
}

/// Pads the deck with a phantom top and bottom card, out-shuffles the
/// `2n+2` cards and strips the phantoms again.
fn faro_in(size: usize) -> Permutation {
    let padded = faro_out(size + 2);
    let images = (0..size)
        .map(|i| (padded.image(i + 1) - 1) as u32)
        .collect();
    Permutation::from_images_unchecked(images)
}

/// Interlaces the top half with the reversed bottom half, optionally
/// turning the bottom cards over (flip) or not (horseshoe).
fn reversed_bottom(n: usize, side: Side, flip: bool) -> OrientedPermutation {
    let offset = match side {
        Side::Out => 0,
        Side::In => 1,
    };
    let mut images = vec![0u32; 2 * n];
    let mut flips = vec![false; 2 * n];
    for i in 0..n {
        images[i] = (2 * i + offset) as u32;
        images[n + i] = (2 * (n - 1 - i) + 1 - offset) as u32;
        flips[n + i] = flip;
    }
    OrientedPermutation::new(Permutation::from_images_unchecked(images), flips)
        .expect("lengths agree")
}

fn reversal(size: usize) -> Permutation {
    Permutation::from_images_unchecked((0..size as u32).rev().collect())
}

fn turnover(size: usize) -> OrientedPermutation {
    OrientedPermutation::new(reversal(size), vec![true; size]).expect("lengths agree")
}

fn conjugate_by_turnover(element: &OrientedPermutation) -> OrientedPermutation {
    let t = turnover(element.len());
    t.then(element).then(&t)
}

/// One letter of a shuffle word: a shuffle or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub kind: ShuffleKind,
    pub inverted: bool,
}

impl Move {
    pub fn new(kind: ShuffleKind) -> Self {
        Move {
            kind,
            inverted: false,
        }
    }

    pub fn inverse_of(kind: ShuffleKind) -> Self {
        Move {
            kind,
            inverted: true,
        }
    }

    pub fn element(self, size: usize) -> Result<OrientedPermutation> {
        let e = self.kind.element(size)?;
        Ok(if self.inverted { e.inverse() } else { e })
    }
}

impl From<ShuffleKind> for Move {
    fn from(kind: ShuffleKind) -> Self {
        Move::new(kind)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            f.write_str("inv:")?;
        }
        f.write_str(self.kind.token())
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let lower = token.to_ascii_lowercase();
        let (inverted, name) = match lower.strip_prefix("inv:") {
            Some(rest) => (true, rest),
            None => (false, lower.as_str()),
        };
        ShuffleKind::ALL
            .into_iter()
            .find(|k| k.token() == name)
            .map(|kind| Move { kind, inverted })
            .ok_or_else(|| Error::Parse(format!("unknown shuffle {token:?}")))
    }
}

/// A sequence of moves applied left to right. The empty word is the
/// identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShuffleWord(pub Vec<Move>);

impl ShuffleWord {
    pub fn empty() -> Self {
        ShuffleWord(Vec::new())
    }

    pub fn repeat(kind: ShuffleKind, times: usize) -> Self {
        ShuffleWord(vec![Move::new(kind); times])
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The product of the word's moves.
    pub fn element(&self, size: usize) -> Result<OrientedPermutation> {
        check_size(size)?;
        self.0
            .iter()
            .try_fold(OrientedPermutation::identity(size), |acc, m| {
                Ok(acc.then(&m.element(size)?))
            })
    }
}

impl FromIterator<Move> for ShuffleWord {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        ShuffleWord(iter.into_iter().collect())
    }
}

impl fmt::Display for ShuffleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for ShuffleWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

/// Shuffle `kind` on a deck of `size` cards.
pub fn element(kind: ShuffleKind, size: usize) -> Result<OrientedPermutation> {
    kind.element(size)
}

pub fn apply_word(word: &ShuffleWord, deck: &Deck) -> Result<Deck> {
    word.0
        .iter()
        .try_fold(deck.clone(), |d, m| d.apply(&m.element(deck.len())?))
}

/// Least `m >= 1` with `element^m` the identity, counting orientation: a
/// cycle of length `L` whose flips have odd parity needs `2L` repetitions.
pub fn element_order(element: &OrientedPermutation) -> BigUint {
    element
        .perm()
        .cycles()
        .iter()
        .map(|cycle| {
            let odd = cycle.iter().filter(|&&p| element.flips()[p]).count() % 2 == 1;
            BigUint::from(cycle.len() * if odd { 2 } else { 1 })
        })
        .fold(BigUint::one(), |acc, len| acc.lcm(&len))
}

pub fn word_order(word: &ShuffleWord, size: usize) -> Result<BigUint> {
    Ok(element_order(&word.element(size)?))
}

/// In or out interlacing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    In,
    Out,
}

impl Side {
    pub fn token(self) -> &'static str {
        match self {
            Side::In => "in",
            Side::Out => "out",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The two families with an in/out generator pair used for routing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Faro,
    Horseshoe,
}

impl Family {
    pub fn shuffle(self, side: Side) -> ShuffleKind {
        match (self, side) {
            (Family::Faro, Side::In) => ShuffleKind::FaroIn,
            (Family::Faro, Side::Out) => ShuffleKind::FaroOut,
            (Family::Horseshoe, Side::In) => ShuffleKind::HorseIn,
            (Family::Horseshoe, Side::Out) => ShuffleKind::HorseOut,
        }
    }

    pub fn word(self, sides: &[Side]) -> ShuffleWord {
        sides.iter().map(|&s| Move::new(self.shuffle(s))).collect()
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "faro" => Ok(Family::Faro),
            "horse" | "horseshoe" => Ok(Family::Horseshoe),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Binary routing of the top card: write `target` in binary and read it
/// from the most significant bit, 1 = in and 0 = out. The card stays in the
/// top half until the last shuffle, so faro and horseshoe behave alike.
/// Target 0 needs no shuffles.
pub fn route_top_to(target: usize, size: usize, family: Family) -> Result<ShuffleWord> {
    check_size(size)?;
    if target >= size {
        return Err(Error::PositionOutOfRange {
            position: target,
            size,
        });
    }
    Ok(family.word(&route_sides(target)))
}

pub fn route_sides(target: usize) -> Vec<Side> {
    if target == 0 {
        return Vec::new();
    }
    let bits = usize::BITS - target.leading_zeros();
    (0..bits)
        .rev()
        .map(|b| {
            if target >> b & 1 == 1 {
                Side::In
            } else {
                Side::Out
            }
        })
        .collect()
}

/// Where a horseshoe shuffle of a `2^k` deck sends the card at `pos`, in
/// terms of the `k`-bit position.
///
/// Both kinds rotate the bits left. A card from the bottom half (leading
/// bit 1) then has its first `k-1` bits complemented, which reverses that
/// half. The in shuffle additionally complements the last bit.
pub fn horseshoe_position_step(k: u32, pos: u32, side: Side) -> Result<u32> {
    if !(1..=16).contains(&k) {
        return Err(Error::InvalidBits(k));
    }
    let mask = (1u32 << k) - 1;
    if pos > mask {
        return Err(Error::ValueOutOfRange {
            value: pos,
            bits: k,
        });
    }
    let lead = pos >> (k - 1);
    let mut next = ((pos << 1) | lead) & mask;
    if lead == 1 {
        next ^= mask & !1;
    }
    if side == Side::In {
        next ^= 1;
    }
    Ok(next)
}

/// `value` as exactly `k` binary digits.
pub fn bit_string(value: u32, k: u32) -> String {
    format!("{value:0width$b}", width = k as usize)
}
