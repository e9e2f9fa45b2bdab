//! Decks of oriented cards and the permutations that act on them.
//!
//! Positions are numbered from the top of the deck, starting at 0. A
//! permutation stores forward images: `images[p]` is the position that the
//! card currently at `p` moves to. Composition is written left to right,
//! so `a.then(&b)` applies `a` first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest deck accepted from callers.
pub const MAX_DECK_SIZE: usize = 1 << 16;

/// A bijection on `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            let x = x as usize;
            if x >= m || seen[x] {
                return Err(Error::NotAPermutation(m));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m as u32).collect(),
        }
    }

    /// The cycle `0 -> 1 -> ... -> m-1 -> 0`.
    pub fn cycle(m: usize) -> Self {
        Permutation {
            images: (0..m as u32).map(|p| (p + 1) % m as u32).collect(),
        }
    }

    /// Swaps `a` and `b`, fixing everything else.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u32> = (0..m as u32).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(p, &x)| p == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.len()];
        for (p, &x) in self.images.iter().enumerate() {
            images[x as usize] = p as u32;
        }
        Permutation { images }
    }

    /// Moves the item at position `p` to position `self.image(p)`.
    pub fn apply_to<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(self.len(), items.len());
        let mut out = items.to_vec();
        for (p, item) in items.iter().enumerate() {
            out[self.image(p)] = item.clone();
        }
        out
    }

    /// Disjoint cycles, each starting at its smallest point. Fixed points
    /// are included as cycles of length one.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// First point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(p, &x)| p != x as usize)
            .map(|(p, _)| p)
    }
}

/// A permutation of positions together with a face-flip flag per position.
///
/// `flips[p]` says whether the card leaving position `p` is turned over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedPermutation {
    perm: Permutation,
    flips: Vec<bool>,
}

impl OrientedPermutation {
    pub fn new(perm: Permutation, flips: Vec<bool>) -> Result<Self> {
        if perm.len() != flips.len() {
            return Err(Error::SizeMismatch {
                expected: perm.len(),
                actual: flips.len(),
            });
        }
        Ok(OrientedPermutation { perm, flips })
    }

    /// An orientation-free element.
    pub fn unflipped(perm: Permutation) -> Self {
        let flips = vec![false; perm.len()];
        OrientedPermutation { perm, flips }
    }

    pub fn identity(m: usize) -> Self {
        Self::unflipped(Permutation::identity(m))
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.flips.iter().all(|&f| !f)
    }

    pub fn then(&self, other: &OrientedPermutation) -> OrientedPermutation {
        let perm = self.perm.then(&other.perm);
        let flips = (0..self.len())
            .map(|p| self.flips[p] ^ other.flips[self.perm.image(p)])
            .collect();
        OrientedPermutation { perm, flips }
    }

    pub fn inverse(&self) -> OrientedPermutation {
        let perm = self.perm.inverse();
        let mut flips = vec![false; self.len()];
        for (p, &f) in self.flips.iter().enumerate() {
            flips[self.perm.image(p)] = f;
        }
        OrientedPermutation { perm, flips }
    }

    /// The same element acting on `2m` points, where the state "position
    /// `p`, face `f`" is the point `p + m * f`.
    pub fn to_point_permutation(&self) -> Permutation {
        let m = self.len();
        let mut images = vec![0u32; 2 * m];
        for p in 0..m {
            for face in 0..2usize {
                let to_face = face ^ self.flips[p] as usize;
                images[p + m * face] = (self.perm.image(p) + m * to_face) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    }

    /// Inverse of [`Self::to_point_permutation`]. Returns `None` when the
    /// permutation does not respect the face pairing.
    pub fn from_point_permutation(points: &Permutation) -> Option<Self> {
        if !points.len().is_multiple_of(2) {
            return None;
        }
        let m = points.len() / 2;
        let mut images = Vec::with_capacity(m);
        let mut flips = Vec::with_capacity(m);
        for p in 0..m {
            let down = points.image(p);
            let up = points.image(p + m);
            if down % m != up % m || down / m == up / m {
                return None;
            }
            images.push((down % m) as u32);
            flips.push(down >= m);
        }
        Some(OrientedPermutation {
            perm: Permutation::from_images_unchecked(images),
            flips,
        })
    }
}

/// A card label plus whether it is face-up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedCard {
    pub label: u32,
    pub flipped: bool,
}

impl OrientedCard {
    pub fn down(label: u32) -> Self {
        OrientedCard {
            label,
            flipped: false,
        }
    }

    pub fn up(label: u32) -> Self {
        OrientedCard {
            label,
            flipped: true,
        }
    }

    pub fn turned(self) -> Self {
        OrientedCard {
            label: self.label,
            flipped: !self.flipped,
        }
    }
}

impl fmt::Display for OrientedCard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flipped {
            write!(f, "~{}", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

/// An even-sized deck, index 0 on top. Labels are always a permutation of
/// `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Deck {
    cards: Vec<OrientedCard>,
}

pub fn check_size(size: usize) -> Result<()> {
    if size < 2 || !size.is_multiple_of(2) || size > MAX_DECK_SIZE {
        return Err(Error::InvalidSize(size));
    }
    Ok(())
}

/// Cards `0..size`, all face-down.
pub fn identity_deck(size: usize) -> Result<Deck> {
    check_size(size)?;
    Ok(Deck {
        cards: (0..size as u32).map(OrientedCard::down).collect(),
    })
}

impl Deck {
    pub fn new(cards: Vec<OrientedCard>) -> Result<Self> {
        check_size(cards.len())?;
        check_labels(&cards)?;
        Ok(Deck { cards })
    }

    /// Face-down deck with the given label order.
    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        Deck::new(labels.iter().copied().map(OrientedCard::down).collect())
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn cards(&self) -> &[OrientedCard] {
        &self.cards
    }

    pub fn labels(&self) -> Vec<u32> {
        self.cards.iter().map(|c| c.label).collect()
    }

    pub fn face_up_count(&self) -> usize {
        self.cards.iter().filter(|c| c.flipped).count()
    }

    /// Position of the card with `label`.
    pub fn position_of(&self, label: u32) -> Option<usize> {
        self.cards.iter().position(|c| c.label == label)
    }

    pub fn apply(&self, op: &OrientedPermutation) -> Result<Deck> {
        apply_oriented(op, self)
    }
}

fn check_labels(cards: &[OrientedCard]) -> Result<()> {
    let mut seen = vec![false; cards.len()];
    for c in cards {
        let l = c.label as usize;
        if l >= cards.len() || seen[l] {
            return Err(Error::NotAPermutation(cards.len()));
        }
        seen[l] = true;
    }
    Ok(())
}

/// The card at position `p` moves to `op.perm()[p]` and is turned over when
/// `op.flips()[p]` is set.
pub fn apply_oriented(op: &OrientedPermutation, deck: &Deck) -> Result<Deck> {
    if op.len() != deck.len() {
        return Err(Error::SizeMismatch {
            expected: op.len(),
            actual: deck.len(),
        });
    }
    let mut cards = deck.cards.clone();
    for (p, &card) in deck.cards.iter().enumerate() {
        cards[op.perm.image(p)] = if op.flips[p] { card.turned() } else { card };
    }
    Ok(Deck { cards })
}

/// Encodes an oriented card of a `2n` deck as a point in `0..4n`.
#[inline]
fn encode(card: OrientedCard, half: u32) -> u32 {
    card.label + half * card.flipped as u32
}

/// Builds the face-down `4n` stay-stack deck for an oriented `2n` deck.
///
/// The first `2n` positions hold the encoded cards; position `4n-1-j`
/// holds the same label with the opposite face to position `j`.
pub fn expand_staystack(deck: &Deck) -> Deck {
    let m = deck.len();
    let half = m as u32;
    let mut cards = vec![OrientedCard::down(0); 2 * m];
    for (j, &card) in deck.cards.iter().enumerate() {
        cards[j] = OrientedCard::down(encode(card, half));
        cards[2 * m - 1 - j] = OrientedCard::down(encode(card.turned(), half));
    }
    Deck { cards }
}

/// Keeps the first half of a stay-stack deck and decodes it.
pub fn contract_staystack(deck: &Deck) -> Result<Deck> {
    let total = deck.len();
    if !total.is_multiple_of(4) {
        return Err(Error::InvalidSize(total));
    }
    let half = (total / 2) as u32;
    let mut cards = Vec::with_capacity(total / 2);
    for j in 0..total / 2 {
        let a = deck.cards[j];
        let b = deck.cards[total - 1 - j];
        if a.flipped || b.flipped || a.label.abs_diff(b.label) != half {
            return Err(Error::NotStayStack(j, total - 1 - j));
        }
        cards.push(OrientedCard {
            label: a.label % half,
            flipped: a.label >= half,
        });
    }
    Deck::new(cards)
}

/// Whether positions `j` and `len-1-j` always hold complementary points:
/// labels differing by `len/2`, both cards face-down.
pub fn is_staystack(deck: &Deck) -> bool {
    let total = deck.len();
    let half = (total / 2) as u32;
    (0..total / 2).all(|j| {
        let a = deck.cards[j];
        let b = deck.cards[total - 1 - j];
        !a.flipped && !b.flipped && a.label.abs_diff(b.label) == half
    })
}

impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, card) in self.cards.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{card}")?;
        }
        Ok(())
    }
}

impl FromStr for OrientedCard {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let (flipped, digits) = match token.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let well_formed = !digits.is_empty()
            && digits.bytes().all(|b| b.is_ascii_digit())
            && (digits == "0" || !digits.starts_with('0'));
        if !well_formed {
            return Err(Error::Parse(format!("bad card token {token:?}")));
        }
        let label = digits
            .parse()
            .map_err(|_| Error::Parse(format!("card label {digits} too large")))?;
        Ok(OrientedCard { label, flipped })
    }
}

impl FromStr for Deck {
    type Err = Error;

    /// Single spaces between tokens; trailing whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim_end();
        if text.is_empty() {
            return Err(Error::Parse("empty deck".into()));
        }
        let cards = text
            .split(' ')
            .map(str::parse)
            .collect::<Result<Vec<OrientedCard>>>()?;
        Deck::new(cards)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deck(text: &str) -> Deck {
        text.parse().unwrap()
    }

    #[test]
    fn identity_decks() {
        assert_eq!(identity_deck(4).unwrap().to_string(), "0 1 2 3");
        assert_eq!(
            identity_deck(10).unwrap().labels(),
            (0..10).collect::<Vec<_>>()
        );
        assert_eq!(identity_deck(10).unwrap().face_up_count(), 0);
        assert_eq!(identity_deck(3), Err(Error::InvalidSize(3)));
        assert_eq!(identity_deck(0), Err(Error::InvalidSize(0)));
        assert!(identity_deck(MAX_DECK_SIZE + 2).is_err());
    }

    #[test]
    fn parse_and_render() {
        let d = deck("~9 0 ~8 1 ~7 2 ~6 3 ~5 4");
        assert_eq!(d.cards()[0], OrientedCard::up(9));
        assert_eq!(d.cards()[1], OrientedCard::down(0));
        assert_eq!(d.to_string(), "~9 0 ~8 1 ~7 2 ~6 3 ~5 4");
        assert_eq!(deck("0 1  \n").to_string(), "0 1");
    }

    #[test]
    fn parse_rejects_bad_grammar() {
        for bad in [
            "", "0  1", " 0 1", "0,1", "0 ~ 1", "0 01", "~~0 1", "0 1 2", "0 2", "0 -1",
        ] {
            assert!(bad.parse::<Deck>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn composition_and_inverse() {
        let a = Permutation::new(vec![2, 0, 1, 3]).unwrap();
        let b = Permutation::transposition(4, 0, 3);
        assert_eq!(a.then(&b).images(), &[2, 3, 1, 0]);
        assert!(a.then(&a.inverse()).is_identity());
        assert!(a.inverse().then(&a).is_identity());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn apply_identity_and_inverse() {
        let d = deck("~3 0 2 ~1");
        let id = OrientedPermutation::identity(4);
        assert_eq!(apply_oriented(&id, &d).unwrap(), d);
        let op = OrientedPermutation::new(
            Permutation::new(vec![1, 3, 0, 2]).unwrap(),
            vec![true, false, false, true],
        )
        .unwrap();
        let moved = apply_oriented(&op, &d).unwrap();
        assert_eq!(moved.to_string(), "2 3 1 0");
        assert_eq!(apply_oriented(&op.inverse(), &moved).unwrap(), d);
        assert!(matches!(
            apply_oriented(&id, &identity_deck(6).unwrap()),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn point_encoding_round_trip() {
        let op = OrientedPermutation::new(
            Permutation::new(vec![1, 2, 0]).unwrap(),
            vec![true, false, true],
        )
        .unwrap();
        let points = op.to_point_permutation();
        assert_eq!(points.images(), &[4, 2, 3, 1, 5, 0]);
        assert_eq!(
            OrientedPermutation::from_point_permutation(&points),
            Some(op)
        );
        assert_eq!(
            OrientedPermutation::from_point_permutation(&Permutation::transposition(6, 0, 1)),
            None
        );
    }

    #[test]
    fn expansion_of_identity_deck() {
        let d = identity_deck(10).unwrap();
        let big = expand_staystack(&d);
        let expected: Vec<u32> = (0..10).chain((10..20).rev()).collect();
        assert_eq!(big.labels(), expected);
        assert!(is_staystack(&big));
        assert_eq!(contract_staystack(&big).unwrap(), d);
    }

    #[test]
    fn smallest_expansion() {
        let d = identity_deck(2).unwrap();
        let big = expand_staystack(&d);
        assert_eq!(big.to_string(), "0 1 3 2");
        assert_eq!(contract_staystack(&big).unwrap(), d);
    }

    #[test]
    fn contraction_of_second_row() {
        // ~9 0 ~8 1 ... ~0 9 with face-up label x encoded as x + 10
        let row: Vec<u32> = vec![
            19, 0, 18, 1, 17, 2, 16, 3, 15, 4, 14, 5, 13, 6, 12, 7, 11, 8, 10, 9,
        ];
        let big = Deck::from_labels(&row).unwrap();
        assert_eq!(
            contract_staystack(&big).unwrap().to_string(),
            "~9 0 ~8 1 ~7 2 ~6 3 ~5 4"
        );
    }

    #[test]
    fn contraction_rejects_broken_pair() {
        let d = identity_deck(4).unwrap();
        let mut labels = expand_staystack(&d).labels();
        labels.swap(0, 1);
        let broken = Deck::from_labels(&labels).unwrap();
        assert_eq!(contract_staystack(&broken), Err(Error::NotStayStack(0, 7)));
        assert!(!is_staystack(&identity_deck(4).unwrap()));
    }
}
