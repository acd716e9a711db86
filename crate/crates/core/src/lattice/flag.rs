use std::fmt;

use crate::lattice::FaceLattice;

/// Chain counts `f_S` for every `S ⊆ {0, ..., d-1}`.
///
/// `f_S` is the number of chains of proper faces whose dimensions are
/// exactly the members of `S`; `f_∅ = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagVector {
    dim: usize,
    // indexed by bitmask over dimensions
    counts: Vec<u64>,
}

impl FlagVector {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, dims: &[usize]) -> u64 {
        let mask = dims.iter().fold(0usize, |m, &j| m | (1 << j));
        self.counts[mask]
    }

    /// Entries ordered by size of `S`, then lexicographically.
    pub fn entries(&self) -> Vec<(Vec<usize>, u64)> {
        let mut out: Vec<(Vec<usize>, u64)> = self
            .counts
            .iter()
            .enumerate()
            .map(|(mask, &c)| ((0..self.dim).filter(|j| mask >> j & 1 == 1).collect(), c))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl fmt::Display for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (set, count)) in self.entries().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let names: Vec<String> = set.iter().map(usize::to_string).collect();
            write!(f, "f{{{}}}={count}", names.join(","))?;
        }
        Ok(())
    }
}

pub fn flag_vector(lat: &FaceLattice) -> FlagVector {
    let d = lat.dim();
    // contained[a][b][j]: faces of dim a inside the j-th face of dim b
    let mut contained: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in a + 1..d {
            contained[a][b] = lat
                .faces(b as isize)
                .iter()
                .map(|g| {
                    lat.faces(a as isize)
                        .iter()
                        .enumerate()
                        .filter(|(_, f)| f.is_subset(g))
                        .map(|(i, _)| i)
                        .collect()
                })
                .collect();
        }
    }

    let mut counts = vec![0u64; 1 << d];
    counts[0] = 1;
    for mask in 1usize..(1 << d) {
        let dims: Vec<usize> = (0..d).filter(|j| mask >> j & 1 == 1).collect();
        let mut chains = vec![1u64; lat.faces(dims[0] as isize).len()];
        for w in dims.windows(2) {
            let (a, b) = (w[0], w[1]);
            chains = contained[a][b]
                .iter()
                .map(|below| below.iter().map(|&i| chains[i]).sum())
                .collect();
        }
        counts[mask] = chains.iter().sum();
    }
    FlagVector { dim: d, counts }
}
