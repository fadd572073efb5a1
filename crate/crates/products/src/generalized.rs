use std::fmt;

/// One slot of a generalized shuffle: a left index, a right index, or both merged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Left(usize),
    Right(usize),
    Both(usize, usize),
}

/// An order-preserving interleaving of `0..p` and `0..q` where a left and a right
/// index may share a slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedShuffle {
    pub slots: Vec<Slot>,
}

impl GeneralizedShuffle {
    pub fn merges(&self) -> usize {
        self.slots.iter().filter(|s| matches!(s, Slot::Both(..))).count()
    }
}

impl fmt::Display for GeneralizedShuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Left(i) => format!("x{}", i + 1),
                Slot::Right(j) => format!("y{}", j + 1),
                Slot::Both(i, j) => format!("x{}y{}", i + 1, j + 1),
            })
            .collect();
        write!(f, "({})", parts.join(";"))
    }
}

pub fn enumerate_generalized_shuffles(p: usize, q: usize) -> Vec<GeneralizedShuffle> {
    fn rec(i: usize, j: usize, p: usize, q: usize, cur: &mut Vec<Slot>, out: &mut Vec<GeneralizedShuffle>) {
        if i == p && j == q {
            out.push(GeneralizedShuffle { slots: cur.clone() });
            return;
        }
        if i < p {
            cur.push(Slot::Left(i));
            rec(i + 1, j, p, q, cur, out);
            cur.pop();
        }
        if j < q {
            cur.push(Slot::Right(j));
            rec(i, j + 1, p, q, cur, out);
            cur.pop();
        }
        if i < p && j < q {
            cur.push(Slot::Both(i, j));
            rec(i + 1, j + 1, p, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, p, q, &mut Vec::new(), &mut out);
    out
}

/// Delannoy numbers `D(p, q) = D(p-1, q) + D(p, q-1) + D(p-1, q-1)`.
pub fn delannoy(p: usize, q: usize) -> u128 {
    let mut t = vec![vec![1u128; q + 1]; p + 1];
    for i in 1..=p {
        for j in 1..=q {
            t[i][j] = t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1];
        }
    }
    t[p][q]
}
