//! Closed-form shuffle-group orders and the harness that checks them
//! against computed ones.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{group_order, FamilyKind, GroupConfig, GroupFamily};
use crate::deck::check_size;
use crate::error::{Error, Result};

/// The order a theorem case predicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: BigUint,
    /// Which case applied, e.g. `n ≡ 2 (mod 4)`.
    pub case: String,
    /// The case formula instantiated at this size, e.g. `5!*2^4`.
    pub formula: String,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn power_of_two_exponent(size: usize) -> Option<usize> {
    size.is_power_of_two()
        .then(|| size.trailing_zeros() as usize)
}

fn faro_closed_form(size: usize) -> ClosedForm {
    let n = size / 2;
    let make = |value: BigUint, case: &str, formula: String| ClosedForm {
        value,
        case: case.to_string(),
        formula,
    };
    if size == 12 {
        return make(BigUint::from(7680u32), "2n = 12", "2^9*3*5".into());
    }
    if size == 24 {
        let v = pow2(17) * BigUint::from(27u32 * 5 * 11);
        return make(v, "2n = 24", "2^17*3^3*5*11".into());
    }
    if let Some(k) = power_of_two_exponent(size) {
        return make(BigUint::from(k) * pow2(k), "2n = 2^k", format!("{k}*2^{k}"));
    }
    if n % 4 == 2 {
        make(
            factorial(n) * pow2(n),
            "n ≡ 2 (mod 4)",
            format!("{n}!*2^{n}"),
        )
    } else if n % 2 == 1 {
        make(
            factorial(n) * pow2(n - 1),
            "n ≡ 1 (mod 2)",
            format!("{n}!*2^{}", n - 1),
        )
    } else {
        make(
            factorial(n) * pow2(n - 2),
            "n ≡ 0 (mod 4)",
            format!("{n}!*2^{}", n - 2),
        )
    }
}

fn horse_closed_form(size: usize) -> ClosedForm {
    let n = size / 2;
    let make = |value: BigUint, case: &str, formula: String| ClosedForm {
        value,
        case: case.to_string(),
        formula,
    };
    if size == 6 {
        return make(BigUint::from(120u32), "2n = 6", "4*5*6".into());
    }
    if size == 12 {
        return make(BigUint::from(95040u32), "2n = 12", "8*9*10*11*12".into());
    }
    match power_of_two_exponent(size) {
        Some(k) if k >= 2 => {
            return make(
                BigUint::from(k + 1) * pow2(k),
                "2n = 2^k, k ≥ 2",
                format!("({k}+1)*2^{k}"),
            )
        }
        _ => {}
    }
    if n % 2 == 1 {
        make(factorial(size), "n ≡ 1 (mod 2), n ≠ 3", format!("{size}!"))
    } else {
        make(
            factorial(size) / 2u32,
            "n ≡ 0 (mod 2), n ≠ 6, 2^k",
            format!("{size}!/2"),
        )
    }
}

/// The order predicted by the theorem case that covers `family`. Flip
/// groups use the faro formula at twice the deck size.
pub fn closed_form_order(family: GroupFamily) -> Result<ClosedForm> {
    let size = family.size();
    check_size(size)?;
    Ok(match family {
        GroupFamily::Faro(_) => faro_closed_form(size),
        GroupFamily::Horse(_) => horse_closed_form(size),
        GroupFamily::Flip(_) => {
            if 2 * size > crate::deck::MAX_DECK_SIZE {
                return Err(Error::NoCase(family.to_string()));
            }
            let faro = faro_closed_form(2 * size);
            ClosedForm {
                value: faro.value,
                case: format!("via Faro({}): {}", 2 * size, faro.case),
                formula: faro.formula,
            }
        }
    })
}

/// Prime factorization by trial division. Shuffle-group orders divide the
/// factorial of the degree, so every prime factor is small.
pub fn factorize(value: &BigUint) -> Vec<(BigUint, u32)> {
    let mut rest = value.clone();
    let mut factors = Vec::new();
    if rest.is_zero() {
        return factors;
    }
    let mut d = BigUint::from(2u32);
    let limit = BigUint::from(1_000_000u32);
    while !rest.is_one() && d <= limit && &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1u32;
    }
    if !rest.is_one() {
        let merge = factors.last().map(|(p, _)| *p == rest).unwrap_or(false);
        if merge {
            factors.last_mut().unwrap().1 += 1;
        } else {
            factors.push((rest, 1));
        }
    }
    factors
}

/// `2^9*3*5` style rendering; `1` for the trivial group.
pub fn format_factored(value: &BigUint) -> String {
    let factors = factorize(value);
    if factors.is_empty() {
        return value.to_string();
    }
    factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrderReport {
    pub family: GroupFamily,
    pub computed: BigUint,
    pub closed_form: ClosedForm,
    /// For flip groups: the independently computed order of `Faro(4n)`.
    pub faro_counterpart: Option<BigUint>,
    pub matches: bool,
}

impl GroupOrderReport {
    pub fn size(&self) -> usize {
        self.family.size()
    }

    pub fn computed_factored(&self) -> String {
        format_factored(&self.computed)
    }
}

fn report(family: GroupFamily, config: &GroupConfig) -> Result<GroupOrderReport> {
    let computed = group_order(family, config)?;
    let closed_form = closed_form_order(family)?;
    let faro_counterpart = match family {
        GroupFamily::Flip(size) => {
            // the cap limits the flip deck, not its doubled faro partner
            let doubled = GroupConfig {
                size_cap: config.size_cap.max(2 * size),
                ..*config
            };
            Some(group_order(GroupFamily::Faro(2 * size), &doubled)?)
        }
        _ => None,
    };
    let matches =
        computed == closed_form.value && faro_counterpart.as_ref().is_none_or(|f| *f == computed);
    Ok(GroupOrderReport {
        family,
        computed,
        closed_form,
        faro_counterpart,
        matches,
    })
}

/// One report per size. A size that fails (over the cap, odd, ...) yields
/// its error without stopping the others.
pub fn verify_theorem(
    kind: FamilyKind,
    sizes: &[usize],
    config: &GroupConfig,
) -> Vec<Result<GroupOrderReport>> {
    #[cfg(feature = "parallel")]
    let iter = sizes.par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = sizes.iter();
    iter.map(|&size| report(kind.at(size), config)).collect()
}

/// Aligned text table, one row per size.
pub fn render_report_table(reports: &[Result<GroupOrderReport>]) -> String {
    let header = [
        "family",
        "size",
        "computed",
        "factored",
        "closed-form",
        "formula",
        "case",
        "match",
    ];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in reports {
        rows.push(match r {
            Ok(r) => vec![
                r.family.kind().name().to_string(),
                r.size().to_string(),
                r.computed.to_string(),
                r.computed_factored(),
                r.closed_form.value.to_string(),
                r.closed_form.formula.clone(),
                r.closed_form.case.clone(),
                if r.matches { "yes" } else { "NO" }.to_string(),
            ],
            Err(e) => vec![format!("error: {e}")],
        });
    }
    let columns = header.len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter(|row| row.len() == columns)
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if row.len() == columns && c + 1 < columns {
                    format!("{cell}{}", " ".repeat(widths[c] - cell.chars().count()))
                } else {
                    cell.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("  ");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}
