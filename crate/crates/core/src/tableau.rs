//! Standard Young tableaux and bitableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Bipartition, Partition, Sign, SignedSet};

/// Young tableau with distinct positive entries, rows listed top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Tableau::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Tableau {
    /// Checks strictly increasing rows and columns, distinct entries and a
    /// partition shape.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = || Error::NonStandard(format!("{rows:?}"));
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|r| r[0].len() < r[1].len()) {
            return Err(bad());
        }
        if rows.iter().any(|r| r.windows(2).any(|p| p[0] >= p[1])) {
            return Err(bad());
        }
        for pair in rows.windows(2) {
            if pair[1]
                .iter()
                .zip(&pair[0])
                .any(|(below, above)| below <= above)
            {
                return Err(bad());
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.contains(&0) || all.windows(2).any(|p| p[0] == p[1]) {
            return Err(bad());
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Sorted entries.
    pub fn content(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.rows.iter().flatten().copied().collect();
        c.sort_unstable();
        c
    }

    /// Row index (0 = top) of `v`, if present.
    pub fn row_of(&self, v: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&v))
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    /// Schensted row insertion; returns the row where the shape grew.
    pub fn row_insert(&mut self, mut x: usize) -> usize {
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y > x) {
                Some(j) => x = std::mem::replace(&mut row[j], x),
                None => {
                    row.push(x);
                    return i;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    /// Appends `v` at the end of row `i` (used to record insertion shapes).
    pub(crate) fn grow(&mut self, i: usize, v: usize) {
        if i == self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[i].push(v);
    }

    fn relabel(&self, labels: &[usize]) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| labels[v - 1]).collect())
                .collect(),
        }
    }

    pub fn row_tableau(n: usize) -> Self {
        Self::from_range_rows(if n == 0 { vec![] } else { vec![n] })
    }

    pub fn column_tableau(n: usize) -> Self {
        Self::from_range_rows(vec![1; n])
    }

    fn from_range_rows(lengths: Vec<usize>) -> Self {
        let mut next = 1;
        let rows = lengths
            .into_iter()
            .map(|len| {
                let r: Vec<usize> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        Tableau { rows }
    }
}

fn check_content(content: &[usize]) -> Result<()> {
    if content.iter().enumerate().all(|(i, &v)| v == i + 1) {
        Ok(())
    } else {
        Err(Error::NonStandard(format!(
            "content {content:?} is not [n]"
        )))
    }
}

/// `Des(Q)`: the `i` with `i + 1` in a strictly lower row. Content must be `[n]`.
pub fn des_tableau(q: &Tableau) -> Result<Vec<usize>> {
    check_content(&q.content())?;
    let row: Vec<usize> = (1..=q.size()).map(|v| q.row_of(v).unwrap()).collect();
    Ok((1..q.size()).filter(|&i| row[i] > row[i - 1]).collect())
}

/// Pair `(Q⁺, Q⁻)` of tableaux whose entries together form `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bitableau {
    pub plus: Tableau,
    pub minus: Tableau,
}

#[derive(Deserialize)]
struct BitableauJson {
    plus: Tableau,
    minus: Tableau,
}

impl<'de> Deserialize<'de> for Bitableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BitableauJson::deserialize(d)?;
        Bitableau::new(j.plus, j.minus).map_err(serde::de::Error::custom)
    }
}

/// Which tableau holds a value and in which row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Cell {
    sign: Sign,
    row: usize,
}

impl Bitableau {
    /// Requires the entries of both tableaux to form `[n]` together.
    pub fn new(plus: Tableau, minus: Tableau) -> Result<Self> {
        let mut content = plus.content();
        content.extend(minus.content());
        content.sort_unstable();
        check_content(&content)?;
        Ok(Bitableau { plus, minus })
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }

    pub fn shape(&self) -> Bipartition {
        Bipartition::new(self.plus.shape(), self.minus.shape())
    }

    fn cells(&self) -> Vec<Cell> {
        let mut cells = vec![
            Cell {
                sign: Sign::Plus,
                row: 0
            };
            self.size()
        ];
        for (sign, t) in [(Sign::Plus, &self.plus), (Sign::Minus, &self.minus)] {
            for (row, r) in t.rows().iter().enumerate() {
                for &v in r {
                    cells[v - 1] = Cell { sign, row };
                }
            }
        }
        cells
    }
}

/// `Des(Q)`: `i + 1` lower than `i` in the same tableau, or `i ∈ Q⁺` and
/// `i + 1 ∈ Q⁻`.
pub fn des_bitableau(q: &Bitableau) -> Vec<usize> {
    let cells = q.cells();
    (1..q.size())
        .filter(|&i| {
            let (a, b) = (cells[i - 1], cells[i]);
            (a.sign == b.sign && b.row > a.row) || (a.sign == Sign::Plus && b.sign == Sign::Minus)
        })
        .collect()
}

/// Signed descent set of a bitableau. Empty bitableaux have none.
pub fn sdes_bitableau(q: &Bitableau) -> Result<SignedSet> {
    let cells = q.cells();
    let n = cells.len();
    let marks = (0..n)
        .map(|i| {
            let in_set =
                i + 1 == n || cells[i].sign != cells[i + 1].sign || cells[i + 1].row > cells[i].row;
            in_set.then_some(cells[i].sign)
        })
        .collect();
    SignedSet::from_marks(marks)
}

/// `2·ΣDes(Q) + |μ|`.
pub fn fmaj_bitableau(q: &Bitableau) -> usize {
    2 * des_bitableau(q).iter().sum::<usize>() + q.minus.size()
}

/// All standard Young tableaux of shape `λ` with content `[|λ|]`.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], t: &mut Vec<Vec<usize>>, v: usize, n: usize, out: &mut Vec<Tableau>) {
        if v > n {
            out.push(Tableau { rows: t.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = t[i].len();
            if len < shape[i] && (i == 0 || t[i - 1].len() > len) {
                t[i].push(v);
                go(shape, t, v + 1, n, out);
                t[i].pop();
            }
        }
    }
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); parts.len()];
    go(parts, &mut rows, 1, shape.size(), &mut out);
    out
}

/// All standard bitableaux of shape `(λ, μ)`.
pub fn enumerate_bitableaux(shape: &Bipartition) -> Vec<Bitableau> {
    let n = shape.size();
    let k = shape.lambda.size();
    let plus_syt = enumerate_syt(&shape.lambda);
    let minus_syt = enumerate_syt(&shape.mu);
    let mut out = Vec::new();
    for chosen in combinations(n, k) {
        let rest: Vec<usize> = (1..=n).filter(|v| !chosen.contains(v)).collect();
        for p in &plus_syt {
            for m in &minus_syt {
                out.push(Bitableau {
                    plus: p.relabel(&chosen),
                    minus: m.relabel(&rest),
                });
            }
        }
    }
    out
}

/// The `k`-subsets of `[n]`, each increasing, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::order_bn;
    use crate::shapes::enumerate_bipartitions;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 3], vec![2, 4], vec![]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![2, 3], vec![1]]).is_err());
        assert!(Bitableau::new(t(&[&[1]]), t(&[&[3]])).is_err());
        assert!(des_tableau(&t(&[&[1, 3]])).is_err());
    }

    #[test]
    fn tableau_descents() {
        assert!(des_tableau(&Tableau::row_tableau(4)).unwrap().is_empty());
        assert_eq!(
            des_tableau(&Tableau::column_tableau(4)).unwrap(),
            vec![1, 2, 3]
        );
        let q = Bitableau::new(Tableau::empty(), Tableau::row_tableau(3)).unwrap();
        assert!(des_bitableau(&q).is_empty());
    }

    #[test]
    fn bitableau_signed_descents() {
        let q = Bitableau::new(Tableau::row_tableau(4), Tableau::empty()).unwrap();
        assert_eq!(sdes_bitableau(&q).unwrap().pairs(), vec![(4, Sign::Plus)]);
        let q = Bitableau::new(Tableau::empty(), Tableau::column_tableau(3)).unwrap();
        assert_eq!(sdes_bitableau(&q).unwrap().word_string(), "111");
        // Q⁺ = column {1; 3}, Q⁻ = {2}: every position is a change of tableau.
        let q = Bitableau::new(t(&[&[1], &[3]]), t(&[&[2]])).unwrap();
        assert_eq!(sdes_bitableau(&q).unwrap().word_string(), "010");
        assert_eq!(des_bitableau(&q), vec![1]);
    }

    #[test]
    fn flag_major_index() {
        let n = 4;
        let q = Bitableau::new(Tableau::row_tableau(n), Tableau::empty()).unwrap();
        assert_eq!(fmaj_bitableau(&q), 0);
        let q = Bitableau::new(Tableau::empty(), Tableau::row_tableau(n)).unwrap();
        assert_eq!(fmaj_bitableau(&q), n);
    }

    #[test]
    fn fmaj_three_at_size_three() {
        let found: Vec<Bitableau> = enumerate_bipartitions(3)
            .iter()
            .flat_map(enumerate_bitableaux)
            .filter(|q| fmaj_bitableau(q) == 3)
            .collect();
        let expected = vec![
            Bitableau::new(Tableau::empty(), t(&[&[1, 2, 3]])).unwrap(),
            Bitableau::new(t(&[&[1], &[3]]), t(&[&[2]])).unwrap(),
            Bitableau::new(t(&[&[1, 3]]), t(&[&[2]])).unwrap(),
        ];
        assert_eq!(found.len(), 3);
        for q in expected {
            assert!(found.contains(&q), "{q:?}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_syt(&Partition::new(vec![2, 1]).unwrap()).len(), 2);
        let one_one = Bipartition::from_parts(&[1], &[1]).unwrap();
        let b = enumerate_bitableaux(&one_one);
        assert_eq!(b.len(), 2);
        assert!(b.contains(&Bitableau::new(t(&[&[1]]), t(&[&[2]])).unwrap()));
        assert!(b.contains(&Bitableau::new(t(&[&[2]]), t(&[&[1]])).unwrap()));
        for n in 0..=5 {
            let mut squares = 0u64;
            for shape in enumerate_bipartitions(n) {
                let all = enumerate_bitableaux(&shape);
                assert_eq!(all.len() as u64, shape.syt_count(), "{shape}");
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
                for q in &all {
                    assert!(Bitableau::new(q.plus.clone(), q.minus.clone()).is_ok());
                }
                squares += (all.len() as u64).pow(2);
            }
            assert_eq!(squares, order_bn(n));
        }
    }

    #[test]
    fn two_descent_notions_agree() {
        for n in 1..=5 {
            for shape in enumerate_bipartitions(n) {
                for q in enumerate_bitableaux(&shape) {
                    let s = sdes_bitableau(&q).unwrap();
                    assert!(s.set().contains(&n));
                    assert_eq!(s.wdes(), des_bitableau(&q), "{q:?}");
                }
            }
        }
    }

    #[test]
    fn json_schema() {
        let q = Bitableau::new(t(&[&[1, 3]]), t(&[&[2]])).unwrap();
        let j = serde_json::to_string(&q).unwrap();
        assert_eq!(j, r#"{"plus":[[1,3]],"minus":[[2]]}"#);
        assert_eq!(serde_json::from_str::<Bitableau>(&j).unwrap(), q);
        assert!(serde_json::from_str::<Bitableau>(r#"{"plus":[[1]],"minus":[[1]]}"#).is_err());
    }
}
