use alloc::{vec, vec::Vec};

/// Square bit matrix over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Column indices set in row `i`.
    pub fn ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            core::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Least `k` set in row `i` but not in row `j`.
    pub fn first_difference(&self, i: usize, j: usize) -> Option<usize> {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .enumerate()
            .find_map(|(w, (&a, &b))| {
                let d = a & !b;
                (d != 0).then(|| w * 64 + d.trailing_zeros() as usize)
            })
    }
}
