//! Brute-force path enumeration: the ground truth the generating functions
//! are checked against. Nothing here touches series algebra.
//!
//! Paths are measured in horizontal span units. Up and Down steps are one
//! unit wide; the Schröder level step is two units, the Motzkin one unit.
//! A path of size `s` spans `2s` units for Catalan and Schröder families and
//! `s` units for Motzkin.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{Pow, Zero};
use thiserror::Error;

use crate::families::{Family, FamilySpec, Method, SequenceResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Level,
    Up,
    Down,
}

impl Step {
    /// Enumeration order: Level < Up < Down.
    pub const ORDER: [Step; 3] = [Step::Level, Step::Up, Step::Down];

    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Level => 0,
        }
    }

    pub fn span(self, family: Family) -> usize {
        match (self, family) {
            (Step::Level, Family::SchroderLarge | Family::SchroderSmall) => 2,
            _ => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Level => 'L',
        }
    }
}

/// Horizontal span of a path of the given size.
pub fn span_of_size(family: Family, size: usize) -> usize {
    match family {
        Family::Motzkin => size,
        _ => 2 * size,
    }
}

/// Largest size the enumerator accepts without an explicit override.
pub fn default_size_cap(family: Family) -> usize {
    match family {
        Family::Catalan => 12,
        Family::SchroderLarge | Family::SchroderSmall => 8,
        Family::Motzkin => 10,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size {size} exceeds the {family} enumeration cap of {cap}; pass --force to override")]
pub struct SizeCapExceeded {
    pub family: Family,
    pub size: usize,
    pub cap: usize,
}

pub fn check_size_cap(family: Family, size: usize, force: bool) -> Result<(), SizeCapExceeded> {
    let cap = default_size_cap(family);
    if size > cap && !force {
        return Err(SizeCapExceeded { family, size, cap });
    }
    Ok(())
}

/// Whether `step` may be taken from `height` with `remaining` span units
/// left, such that the path can still return to the axis.
fn step_allowed(family: Family, step: Step, height: usize, remaining: usize) -> bool {
    let span = step.span(family);
    if span > remaining {
        return false;
    }
    let after = remaining - span;
    match step {
        Step::Up => height < after,
        Step::Down => height > 0,
        Step::Level => match family {
            Family::Catalan => false,
            Family::SchroderSmall if height == 0 => false,
            _ => height <= after,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    family: Family,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        let span: usize = self.steps.iter().map(|s| s.span(self.family)).sum();
        match self.family {
            Family::Motzkin => span,
            _ => span / 2,
        }
    }

    pub fn count(&self, kind: Step) -> usize {
        self.steps.iter().filter(|&&s| s == kind).count()
    }

    /// `m^(#Down) · n^(#Level)`; Catalan paths have no level steps.
    pub fn weight(&self, m: u32, n: u32) -> BigUint {
        let d = self.count(Step::Down) as u32;
        let l = self.count(Step::Level) as u32;
        Pow::pow(BigUint::from(m), d) * Pow::pow(BigUint::from(n), l)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&path_to_string(self))
    }
}

pub fn path_to_string(path: &LatticePath) -> String {
    path.steps.iter().map(|s| s.symbol()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown step `{symbol}` at position {position}; expected U, D or L")]
    UnknownStep { position: usize, symbol: char },
    #[error("Catalan paths have no level step, found L at position {position}")]
    LevelNotAllowed { position: usize },
    #[error("Level at height 0 at position {position}; small Schröder paths have no level step on the axis")]
    LevelOnAxis { position: usize },
    #[error("path drops below the axis at position {position}")]
    BelowAxis { position: usize },
    #[error("final height {height} != 0")]
    NonzeroFinalHeight { height: usize },
}

/// Parses a step string. Positions in diagnostics are 1-based.
pub fn parse_path(s: &str, family: Family) -> Result<LatticePath, ParseError> {
    let mut steps = Vec::with_capacity(s.len());
    let mut height = 0usize;
    for (i, symbol) in s.chars().enumerate() {
        let position = i + 1;
        let step = match symbol {
            'U' => Step::Up,
            'D' => Step::Down,
            'L' => Step::Level,
            _ => return Err(ParseError::UnknownStep { position, symbol }),
        };
        match step {
            Step::Up => height += 1,
            Step::Down => {
                height = height.checked_sub(1).ok_or(ParseError::BelowAxis { position })?;
            }
            Step::Level => match family {
                Family::Catalan => return Err(ParseError::LevelNotAllowed { position }),
                Family::SchroderSmall if height == 0 => {
                    return Err(ParseError::LevelOnAxis { position })
                }
                _ => {}
            },
        }
        steps.push(step);
    }
    if height != 0 {
        return Err(ParseError::NonzeroFinalHeight { height });
    }
    Ok(LatticePath { family, steps })
}

struct Frame {
    height: usize,
    remaining: usize,
    next_choice: usize,
}

/// Depth-first stream over every path of one family and size, in
/// lexicographic order with Level < Up < Down.
pub struct Paths {
    family: Family,
    steps: Vec<Step>,
    stack: Vec<Frame>,
}

impl Iterator for Paths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        'search: loop {
            let frame = self.stack.last_mut()?;
            if frame.remaining == 0 {
                debug_assert_eq!(frame.height, 0);
                let path = LatticePath { family: self.family, steps: self.steps.clone() };
                self.stack.pop();
                self.steps.pop();
                return Some(path);
            }
            while frame.next_choice < Step::ORDER.len() {
                let step = Step::ORDER[frame.next_choice];
                frame.next_choice += 1;
                if step_allowed(self.family, step, frame.height, frame.remaining) {
                    let child = Frame {
                        height: (frame.height as i64 + step.rise()) as usize,
                        remaining: frame.remaining - step.span(self.family),
                        next_choice: 0,
                    };
                    self.steps.push(step);
                    self.stack.push(child);
                    continue 'search;
                }
            }
            self.stack.pop();
            self.steps.pop();
        }
    }
}

pub fn enumerate_paths(family: Family, size: usize) -> Paths {
    let root = Frame { height: 0, remaining: span_of_size(family, size), next_choice: 0 };
    Paths { family, steps: Vec::new(), stack: vec![root] }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCount {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    pub size: usize,
    pub count: BigUint,
}

/// Sum of `m^(#Down) · n^(#Level)` over all paths of the given size.
pub fn colored_count(family: Family, size: usize, m: u32, n: u32) -> ColoredCount {
    let count = enumerate_paths(family, size).map(|p| p.weight(m, n)).sum();
    ColoredCount { family, m, n, size, count }
}

/// Number of paths with each `(#Down, #Level)` profile.
pub fn step_profile(family: Family, size: usize) -> BTreeMap<(usize, usize), u64> {
    let mut profile = BTreeMap::new();
    for p in enumerate_paths(family, size) {
        *profile.entry((p.count(Step::Down), p.count(Step::Level))).or_insert(0) += 1;
    }
    profile
}

/// The same weighted count as [`colored_count`], computed from the
/// `(#Down, #Level)` profile instead of path by path.
pub fn colored_count_by_profile(family: Family, size: usize, m: u32, n: u32) -> BigUint {
    step_profile(family, size)
        .into_iter()
        .map(|((d, l), paths)| {
            BigUint::from(paths) * Pow::pow(BigUint::from(m), d) * Pow::pow(BigUint::from(n), l)
        })
        .fold(BigUint::zero(), |acc, t| acc + t)
}

/// Oracle sequence for sizes `0..=order`.
pub fn oracle_series(spec: &FamilySpec, order: usize) -> SequenceResult {
    let coeffs = (0..=order).map(|size| colored_count(spec.family, size, spec.m, spec.n).count).collect();
    SequenceResult::new(*spec, Method::Oracle, coeffs)
}

/// Size 0 always has exactly the empty path.
pub fn empty_path(family: Family) -> LatticePath {
    LatticePath { family, steps: Vec::new() }
}
