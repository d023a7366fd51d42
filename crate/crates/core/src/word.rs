use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::FormatError;
use crate::tableau::{Composition, Letter};

/// A finite sequence of positive letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn content(&self) -> Composition {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0; max];
        for &x in &self.0 {
            counts[x as usize - 1] += 1;
        }
        Composition { counts }
    }

    /// Every suffix has partition content.
    pub fn is_ballot(&self) -> bool {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; max + 1];
        for &x in self.0.iter().rev() {
            let k = x as usize;
            counts[k] += 1;
            if k > 1 && counts[k] > counts[k - 1] {
                return false;
            }
        }
        true
    }

    /// Whether `self` is a subsequence of `other`.
    pub fn is_subword_of(&self, other: &Word) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

/// Compact digit string when every letter is a single digit, otherwise
/// space separated.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&x| x <= 9);
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 && !compact {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Accepts a JSON integer array, space/comma separated letters, or a
/// compact digit string.
impl FromStr for Word {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FormatError::Word(s.to_string());
        let letters: Vec<Letter> = if s.starts_with('[') {
            serde_json::from_str(s)?
        } else if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        if letters.contains(&0) {
            return Err(bad());
        }
        Ok(Word(letters))
    }
}
