//! Finite groups as Cayley tables, and complete families of unitary irreps.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::algebra::{C64, ONE, ZERO};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates a Cayley table (`table[s * order + t] = st`) and derives the
    /// identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        let order = labels.len();
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "table of length {} for {order} elements",
                table.len()
            )));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let mul = |s: usize, t: usize| table[s * order + t];
        let identity = (0..order)
            .find(|&e| (0..order).all(|s| mul(e, s) == s && mul(s, e) == s))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for (s, label) in labels.iter().enumerate() {
            let inv = (0..order)
                .find(|&t| mul(s, t) == identity && mul(t, s) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {label} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            order,
            table,
            identity,
            inverse,
            labels,
        })
    }

    /// `Z_n`, element `a` standing for `a mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        Self::from_table(format!("Z{n}"), table, (0..n).map(|a| a.to_string()).collect())
    }

    /// The dihedral group of order `2n`; element `a + n·b` is `r^a s^b`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup("dihedral group needs n >= 2".into()));
        }
        let order = 2 * n;
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (a, b) = (x % n, x / n);
            for y in 0..order {
                let (c, d) = (y % n, y / n);
                let rot = if b == 0 { a + c } else { a + n - c } % n;
                table[x * order + y] = rot + n * ((b + d) % 2);
            }
        }
        let labels = (0..order)
            .map(|x| match (x % n, x / n) {
                (0, 0) => "e".to_string(),
                (a, 0) => format!("r{a}"),
                (0, _) => "s".to_string(),
                (a, _) => format!("r{a}s"),
            })
            .collect();
        Self::from_table(format!("D{n}"), table, labels)
    }

    /// `S_n` in lexicographic one-line order; the product `στ` applies `τ`
    /// first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::Unsupported(format!("symmetric group S{n}; supported 1..=5")));
        }
        let perms = permutations(n);
        let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let order = perms.len();
        let mut table = vec![0; order * order];
        for (x, s) in perms.iter().enumerate() {
            for (y, t) in perms.iter().enumerate() {
                let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                table[x * order + y] = index[st.as_slice()];
            }
        }
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Self::from_table(format!("S{n}"), table, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.order + t]
    }

    pub fn inverse(&self, s: usize) -> usize {
        self.inverse[s]
    }

    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|s| (0..self.order).all(|t| self.mul(s, t) == self.mul(t, s)))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Disjoint-cycle notation with 1-based points, `e` for the identity.
pub fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// A unitary representation given by one matrix per group element.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryRep {
    pub name: String,
    pub mats: Vec<DMatrix<C64>>,
}

impl UnitaryRep {
    pub fn dim(&self) -> usize {
        self.mats[0].nrows()
    }

    /// Checks the homomorphism property and unitarity against `group`.
    pub fn validate(&self, group: &GroupTable, tol: f64) -> Result<()> {
        let err = |msg: String| Error::InvalidIrrepFamily(format!("`{}`: {msg}", self.name));
        if self.mats.len() != group.order() {
            return Err(err(format!("{} matrices for {} elements", self.mats.len(), group.order())));
        }
        let d = self.dim();
        let id = DMatrix::<C64>::identity(d, d);
        for (s, m) in self.mats.iter().enumerate() {
            if m.nrows() != d || m.ncols() != d {
                return Err(err("matrices of differing shapes".into()));
            }
            if (m.adjoint() * m - &id).camax() > tol {
                return Err(err(format!("matrix at {} is not unitary", group.label(s))));
            }
        }
        for s in 0..group.order() {
            for t in 0..group.order() {
                let r = &self.mats[group.mul(s, t)] - &self.mats[s] * &self.mats[t];
                if r.camax() > tol {
                    return Err(err(format!(
                        "not a homomorphism at ({}, {})",
                        group.label(s),
                        group.label(t)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A complete family of pairwise inequivalent unitary irreps of a group.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrepFamily {
    reps: Vec<UnitaryRep>,
}

impl IrrepFamily {
    /// Validates each representation, completeness `Σ d² = |G|`, and the
    /// Schur orthogonality relations, which certify irreducibility and
    /// pairwise inequivalence.
    pub fn new(group: &GroupTable, reps: Vec<UnitaryRep>) -> Result<Self> {
        const TOL: f64 = 1e-9;
        for r in &reps {
            r.validate(group, TOL)?;
        }
        let total: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
        if total != group.order() {
            return Err(Error::InvalidIrrepFamily(format!(
                "sum of squared dimensions {total} != group order {}",
                group.order()
            )));
        }
        let g = group.order() as f64;
        let elems: Vec<(usize, usize, usize)> = reps
            .iter()
            .enumerate()
            .flat_map(|(a, r)| (0..r.dim()).flat_map(move |i| (0..r.dim()).map(move |j| (a, i, j))))
            .collect();
        for (x, &(a, i, j)) in elems.iter().enumerate() {
            for &(b, k, l) in &elems[x..] {
                let ip: C64 = (0..group.order())
                    .map(|s| reps[a].mats[s][(i, j)].conj() * reps[b].mats[s][(k, l)])
                    .sum::<C64>()
                    / g;
                let expected = if (a, i, j) == (b, k, l) { 1.0 / reps[a].dim() as f64 } else { 0.0 };
                if (ip - expected).norm() > TOL {
                    return Err(Error::InvalidIrrepFamily(format!(
                        "orthogonality fails between `{}` and `{}`",
                        reps[a].name, reps[b].name
                    )));
                }
            }
        }
        Ok(Self { reps })
    }

    pub fn reps(&self) -> &[UnitaryRep] {
        &self.reps
    }

    /// Characters `a ↦ ζ_n^{ja}` of `Z_n`.
    pub fn cyclic(group: &GroupTable) -> Result<Self> {
        let n = group.order();
        let reps = (0..n)
            .map(|j| UnitaryRep {
                name: format!("chi{j}"),
                mats: (0..n)
                    .map(|a| DMatrix::from_element(1, 1, C64::from_polar(1.0, 2.0 * PI * (j * a) as f64 / n as f64)))
                    .collect(),
            })
            .collect();
        Self::new(group, reps)
    }

    /// Irreps of the dihedral group of order `2n` as laid out by
    /// [`GroupTable::dihedral`].
    pub fn dihedral(group: &GroupTable) -> Result<Self> {
        let n = group.order() / 2;
        let one_dim = |name: &str, r: f64, s: f64| UnitaryRep {
            name: name.to_string(),
            mats: (0..2 * n)
                .map(|x| DMatrix::from_element(1, 1, C64::new(r.powi((x % n) as i32) * s.powi((x / n) as i32), 0.0)))
                .collect(),
        };
        let mut reps = vec![one_dim("trivial", 1.0, 1.0), one_dim("sign", 1.0, -1.0)];
        if n.is_multiple_of(2) {
            reps.push(one_dim("alt+", -1.0, 1.0));
            reps.push(one_dim("alt-", -1.0, -1.0));
        }
        for h in 1..n.div_ceil(2) {
            let z = C64::from_polar(1.0, 2.0 * PI * h as f64 / n as f64);
            let mats = (0..2 * n)
                .map(|x| {
                    let (a, b) = ((x % n) as i32, x / n);
                    let rot = DMatrix::from_row_slice(2, 2, &[z.powi(a), ZERO, ZERO, z.powi(-a)]);
                    if b == 0 {
                        rot
                    } else {
                        rot * DMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
                    }
                })
                .collect();
            reps.push(UnitaryRep {
                name: format!("rho{h}"),
                mats,
            });
        }
        Self::new(group, reps)
    }

    /// Irreps of `S_n` in Young's orthogonal form, one per partition of `n`.
    pub fn symmetric(group: &GroupTable, n: usize) -> Result<Self> {
        let perms = permutations(n);
        if perms.len() != group.order() {
            return Err(Error::InvalidIrrepFamily(format!("table is not S{n}")));
        }
        let reps = partitions(n)
            .into_iter()
            .map(|shape| young_orthogonal(&shape, &perms))
            .collect();
        Self::new(group, reps)
    }
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Standard tableaux of a shape, each as the (row, col) cell of every entry.
fn standard_tableaux(shape: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(shape: &[usize], filled: &mut Vec<usize>, cells: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cells.len() == shape.iter().sum::<usize>() {
            out.push(cells.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                cells.push((r, c));
                go(shape, filled, cells, out);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(shape, &mut vec![0; shape.len()], &mut Vec::new(), &mut out);
    out
}

fn young_orthogonal(shape: &[usize], perms: &[Vec<usize>]) -> UnitaryRep {
    let n: usize = shape.iter().sum();
    let tableaux = standard_tableaux(shape);
    let d = tableaux.len();
    let lookup: HashMap<&[(usize, usize)], usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let content = |cell: (usize, usize)| cell.1 as f64 - cell.0 as f64;

    // adjacent transposition (i i+1)
    let generators: Vec<DMatrix<C64>> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut m = DMatrix::<C64>::zeros(d, d);
            for (t, cells) in tableaux.iter().enumerate() {
                let r = content(cells[i + 1]) - content(cells[i]);
                m[(t, t)] = C64::new(1.0 / r, 0.0);
                if r.abs() > 1.0 {
                    let mut swapped = cells.clone();
                    swapped.swap(i, i + 1);
                    let u = lookup[swapped.as_slice()];
                    m[(u, t)] = C64::new((1.0 - 1.0 / (r * r)).sqrt(), 0.0);
                }
            }
            m
        })
        .collect();

    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut mats: Vec<Option<DMatrix<C64>>> = vec![None; perms.len()];
    let id: Vec<usize> = (0..n).collect();
    mats[index[id.as_slice()]] = Some(DMatrix::identity(d, d));
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let mp = mats[index[p.as_slice()]].clone().expect("visited");
        for (i, g) in generators.iter().enumerate() {
            // (i i+1) ∘ p
            let q: Vec<usize> = p
                .iter()
                .map(|&x| match x {
                    x if x == i => i + 1,
                    x if x == i + 1 => i,
                    x => x,
                })
                .collect();
            let slot = index[q.as_slice()];
            if mats[slot].is_none() {
                mats[slot] = Some(g * &mp);
                queue.push_back(q);
            }
        }
    }
    let name = format!(
        "[{}]",
        shape.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    );
    UnitaryRep {
        name,
        mats: mats.into_iter().map(|m| m.expect("S_n is generated by adjacent transpositions")).collect(),
    }
}
