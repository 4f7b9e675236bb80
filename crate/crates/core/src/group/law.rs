use std::collections::HashMap;
use std::sync::Arc;

use super::GroupTable;

/// Multiplication laws in coordinate form.
#[derive(Clone)]
pub(crate) enum Law {
    Cayley {
        order: usize,
        identity: usize,
        table: Arc<[u32]>,
    },
    Metacyclic(MetacyclicLaw),
    Product {
        left: Arc<GroupTable>,
        right: Arc<GroupTable>,
    },
    Permutation(Arc<PermLaw>),
    Quotient(Arc<QuotientLaw>),
}

impl Law {
    pub(crate) fn order(&self) -> usize {
        match self {
            Law::Cayley { order, .. } => *order,
            Law::Metacyclic(m) => (m.a * m.b) as usize,
            Law::Product { left, right } => left.order() * right.order(),
            Law::Permutation(p) => p.perms.len(),
            Law::Quotient(q) => q.reps.len(),
        }
    }

    pub(crate) fn identity(&self) -> usize {
        match self {
            Law::Cayley { identity, .. } => *identity,
            _ => 0,
        }
    }

    #[inline]
    pub(crate) fn mul(&self, g: usize, h: usize) -> usize {
        match self {
            Law::Cayley { order, table, .. } => table[g * order + h] as usize,
            Law::Metacyclic(m) => m.mul(g, h),
            Law::Product { left, right } => {
                let n2 = right.order();
                let (a1, a2) = (g / n2, g % n2);
                let (b1, b2) = (h / n2, h % n2);
                left.mul(a1, b1) * n2 + right.mul(a2, b2)
            }
            Law::Permutation(p) => p.mul(g, h),
            Law::Quotient(q) => {
                q.coset_of[q.parent.mul(q.reps[g] as usize, q.reps[h] as usize)] as usize
            }
        }
    }

    pub(crate) fn inverse(&self, g: usize) -> usize {
        match self {
            Law::Cayley {
                order,
                identity,
                table,
            } => (0..*order)
                .find(|&h| table[g * order + h] as usize == *identity)
                .expect("Latin-square table has an inverse in every row"),
            Law::Metacyclic(m) => m.inverse(g),
            Law::Product { left, right } => {
                let n2 = right.order();
                left.inv(g / n2) * n2 + right.inv(g % n2)
            }
            Law::Permutation(p) => {
                let perm = &p.perms[g];
                let mut inv = vec![0u32; perm.len()];
                for (i, &v) in perm.iter().enumerate() {
                    inv[v as usize] = i as u32;
                }
                p.index[inv.as_slice()] as usize
            }
            Law::Quotient(q) => q.coset_of[q.parent.inv(q.reps[g] as usize)] as usize,
        }
    }
}

/// `⟨x, y | x^a = 1, y^b = x^c, y x y⁻¹ = x^t⟩` with element `x^i y^j` at id
/// `i * b + j`. Requires `t^b ≡ 1` and `c (t - 1) ≡ 0 (mod a)`.
#[derive(Clone, Debug)]
pub(crate) struct MetacyclicLaw {
    pub(crate) a: u64,
    pub(crate) b: u64,
    pub(crate) c: u64,
    t_pow: Vec<u64>,
}

impl MetacyclicLaw {
    pub(crate) fn new(a: u64, b: u64, t: u64, c: u64) -> Self {
        let mut t_pow = Vec::with_capacity(b as usize);
        let mut acc = 1 % a;
        for _ in 0..b {
            t_pow.push(acc);
            acc = acc * (t % a) % a;
        }
        MetacyclicLaw {
            a,
            b,
            c: c % a,
            t_pow,
        }
    }

    #[inline]
    fn mul(&self, g: usize, h: usize) -> usize {
        let b = self.b as usize;
        let (i, j) = ((g / b) as u64, g % b);
        let (k, l) = ((h / b) as u64, h % b);
        let mut x = i + k * self.t_pow[j] % self.a;
        let mut y = j + l;
        if y >= b {
            y -= b;
            x += self.c;
        }
        ((x % self.a) as usize) * b + y
    }

    fn inverse(&self, g: usize) -> usize {
        let b = self.b as usize;
        let (i, j) = ((g / b) as u64, g % b);
        let neg_i = ((self.a - i % self.a) % self.a) as usize;
        if j == 0 {
            return neg_i * b;
        }
        // y^-j = x^-c y^(b-j)
        let neg_c = ((self.a - self.c) % self.a) as usize;
        self.mul(neg_c * b + (b - j), neg_i * b)
    }
}

/// Permutations of `0..degree` composed as functions: `(g h)(x) = g(h(x))`.
pub(crate) struct PermLaw {
    pub(crate) perms: Vec<Box<[u32]>>,
    pub(crate) index: HashMap<Box<[u32]>, u32>,
}

impl PermLaw {
    fn mul(&self, g: usize, h: usize) -> usize {
        let (pg, ph) = (&self.perms[g], &self.perms[h]);
        let composed: Vec<u32> = ph.iter().map(|&x| pg[x as usize]).collect();
        self.index[composed.as_slice()] as usize
    }
}

/// Cosets of a normal subgroup, each represented by its first element.
pub(crate) struct QuotientLaw {
    pub(crate) parent: GroupTable,
    pub(crate) reps: Vec<u32>,
    pub(crate) coset_of: Vec<u32>,
}
