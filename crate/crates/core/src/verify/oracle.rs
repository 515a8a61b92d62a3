use std::collections::BTreeSet;

use itertools::Itertools;

use crate::combinatorics::{check_rank, enumerate_wp, WpIndex};
use crate::error::{Error, Result};

/// Bruhat order on the full symmetric group `S_n`, independent of the `W^P` shortcuts.
#[derive(Debug, Clone)]
pub struct PermutationOracle {
    n: usize,
    all: Vec<Vec<usize>>,
}

impl PermutationOracle {
    pub fn new(n: i64) -> Result<Self> {
        let n = check_rank(n)? as usize;
        let all = (1..=n).permutations(n).collect();
        Ok(PermutationOracle { n, all })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, p: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.n + 1];
        for &x in p {
            if x == 0 || x > self.n || seen[x] {
                return Err(Error::NotPermutation(self.n));
            }
            seen[x] = true;
        }
        if p.len() == self.n {
            Ok(())
        } else {
            Err(Error::NotPermutation(self.n))
        }
    }

    /// Tableau criterion: for every prefix length `k`, the sorted prefix of `u` is
    /// entrywise at most the sorted prefix of `v`.
    pub fn sn_bruhat_leq(&self, u: &[usize], v: &[usize]) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(tableau_leq(u, v))
    }

    /// Minimal coset representatives: `w(2) < ... < w(n-1)`.
    pub fn is_min_rep(p: &[usize]) -> bool {
        p[1..p.len() - 1].windows(2).all(|w| w[0] < w[1])
    }

    /// `I(v)` straight from its definition: `u <= v` in `W^P` such that no permutation
    /// outside `W^P` lies strictly between them.
    pub fn i_set(&self, v: WpIndex) -> Result<BTreeSet<WpIndex>> {
        if v.n() as usize != self.n {
            return Err(Error::RankMismatch(self.n as u32, v.n()));
        }
        let pv = v.permutation();
        let mut out = BTreeSet::new();
        for u in enumerate_wp(self.n as i64)? {
            let pu = u.permutation();
            if !tableau_leq(&pu, &pv) {
                continue;
            }
            let blocked = self.all.iter().any(|w| {
                !Self::is_min_rep(w)
                    && *w != pu
                    && *w != pv
                    && tableau_leq(&pu, w)
                    && tableau_leq(w, &pv)
            });
            if !blocked {
                out.insert(u);
            }
        }
        Ok(out)
    }
}

fn tableau_leq(u: &[usize], v: &[usize]) -> bool {
    (1..u.len()).all(|k| {
        let mut a = u[..k].to_vec();
        let mut b = v[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let o = PermutationOracle::new(3).unwrap();
        assert_eq!(o.sn_bruhat_leq(&[2, 1, 3], &[2, 3, 1]), Ok(true));
        assert_eq!(o.sn_bruhat_leq(&[2, 3, 1], &[2, 1, 3]), Ok(false));
        for u in &o.all {
            assert_eq!(o.sn_bruhat_leq(u, u), Ok(true));
            assert_eq!(o.sn_bruhat_leq(u, &[3, 2, 1]), Ok(true));
        }
        assert_eq!(o.sn_bruhat_leq(&[1, 1, 3], &[1, 2, 3]), Err(Error::NotPermutation(3)));
        assert_eq!(o.sn_bruhat_leq(&[1, 2], &[1, 2, 3]), Err(Error::NotPermutation(3)));
    }

    #[test]
    fn reference_set() {
        let o = PermutationOracle::new(5).unwrap();
        let v = WpIndex::new(3, 2, 5).unwrap();
        let expect: BTreeSet<_> = [(3, 2), (1, 2), (2, 3), (3, 4), (1, 3), (2, 4)]
            .iter()
            .map(|&(i, j)| WpIndex::new(i, j, 5).unwrap())
            .collect();
        assert_eq!(o.i_set(v).unwrap(), expect);
    }
}
