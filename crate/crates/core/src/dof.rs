//! Freedom/relation census for a polyhedron given only its face sizes.
//!
//! Pin one `k`-gonal face into a plane with one of its edges fixed. The
//! remaining vertices of that face move in the plane, every other vertex in
//! space:
//!
//! ```text
//! freedoms  = 2 (k - 2) + 3 (v - k)
//! relations = (e - 1) + sum_i n_i (i - 3) - (k - 3)
//! ```
//!
//! The relations are the unfixed edge lengths plus the coplanarity
//! conditions of every face not already pinned. Both counts agree for any
//! face vector satisfying Euler's formula.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::DofError;

/// Counts `n_i` of `i`-gonal faces, and the size of the face pinned to the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceVector {
    counts: BTreeMap<u32, u64>,
    pinned: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub edges: i64,
    pub vertices: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DofBalance {
    pub freedoms: i64,
    pub relations: i64,
    pub balanced: bool,
}

impl FaceVector {
    /// Face vector pinned on its largest face.
    pub fn new(counts: impl IntoIterator<Item = (u32, u64)>) -> Result<Self, DofError> {
        let counts: BTreeMap<u32, u64> = counts.into_iter().filter(|&(_, n)| n > 0).fold(
            BTreeMap::new(),
            |mut acc, (size, n)| {
                *acc.entry(size).or_default() += n;
                acc
            },
        );
        let largest = *counts.keys().next_back().ok_or(DofError::Empty)?;
        Self::with_pinned(counts, largest)
    }

    pub fn with_pinned(
        counts: impl IntoIterator<Item = (u32, u64)>,
        pinned: u32,
    ) -> Result<Self, DofError> {
        let mut map = BTreeMap::new();
        for (size, n) in counts {
            if size < 3 {
                return Err(DofError::FaceTooSmall(size));
            }
            if n > 0 {
                *map.entry(size).or_default() += n;
            }
        }
        if map.is_empty() {
            return Err(DofError::Empty);
        }
        if !map.contains_key(&pinned) {
            return Err(DofError::PinnedFaceAbsent(pinned));
        }
        let fv = Self {
            counts: map,
            pinned,
        };
        let c = fv.counts()?;
        if c.vertices < 4 {
            return Err(DofError::TooFewVertices(c.vertices));
        }
        Ok(fv)
    }

    pub fn pinned(&self) -> u32 {
        self.pinned
    }

    pub fn largest(&self) -> u32 {
        *self.counts.keys().next_back().expect("non-empty by construction")
    }

    pub fn faces(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&k, &n)| (k, n))
    }

    /// Edge and vertex counts: `e = sum(i n_i) / 2`, `v = sum((i - 2) n_i) / 2 + 2`.
    pub fn counts(&self) -> Result<Counts, DofError> {
        let incidences: i64 = self.faces().map(|(i, n)| i as i64 * n as i64).sum();
        if incidences % 2 != 0 {
            return Err(DofError::NonIntegralCount);
        }
        // sum (i - 2) n_i has the same parity as sum i n_i
        let reduced: i64 = self.faces().map(|(i, n)| (i as i64 - 2) * n as i64).sum();
        Ok(Counts {
            edges: incidences / 2,
            vertices: reduced / 2 + 2,
        })
    }

    pub fn dof_balance(&self) -> Result<DofBalance, DofError> {
        let Counts { edges, vertices } = self.counts()?;
        let k = self.pinned as i64;
        let freedoms = 2 * (k - 2) + 3 * (vertices - k);
        let planarity: i64 = self.faces().map(|(i, n)| n as i64 * (i as i64 - 3)).sum();
        let relations = (edges - 1) + planarity - (k - 3);
        Ok(DofBalance {
            freedoms,
            relations,
            balanced: freedoms == relations,
        })
    }
}

impl FromStr for FaceVector {
    type Err = DofError;

    /// Parses `"3:4,4:1"` (size:count pairs).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (size, count) = item
                .split_once(':')
                .ok_or_else(|| DofError::Parse(format!("expected size:count, got {item:?}")))?;
            let size = size
                .trim()
                .parse::<u32>()
                .map_err(|e| DofError::Parse(format!("{size:?}: {e}")))?;
            let count = count
                .trim()
                .parse::<u64>()
                .map_err(|e| DofError::Parse(format!("{count:?}: {e}")))?;
            pairs.push((size, count));
        }
        if let Some(&(size, _)) = pairs.iter().find(|(size, _)| *size < 3) {
            return Err(DofError::FaceTooSmall(size));
        }
        FaceVector::new(pairs)
    }
}
