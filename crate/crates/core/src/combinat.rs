//! Colored combinatorial models: 0,1_V-tableaux, colored set partitions and
//! permutations of `[n]_0 = {0, 1, ..., n}`, and signed partitions.
//!
//! Rows of a 0,1_V-tableau are numbered from 1 at the top of its rectangle.
//! Column `j` has `top_j + 1` boxes above the lattice path and `bottom_j + 1`
//! boxes below it. Colors are `1..=budget`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stirling::{def, Kind};
use crate::tableaux::{enumerate_t, enumerate_td, BTableau, Column, DEFAULT_CAP};
use crate::weights::{WeightPair, WeightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    V,
    H,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::V => "V",
            Step::H => "H",
        })
    }
}

fn render_steps(steps: &[Step]) -> String {
    steps.iter().map(Step::to_string).collect()
}

/// Position and color of a 1-entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mark {
    pub row: i64,
    pub color: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColumnMarks {
    pub above: Mark,
    pub below: Mark,
}

fn int_value(spec: &WeightSpec, i: i64) -> Result<BigInt> {
    let v = spec.eval_integer(i)?;
    if v.is_negative() {
        return Err(Error::NonCombinatorialWeights(format!("negative value {v} at index {i}")));
    }
    Ok(v)
}

fn to_budget(b: BigInt) -> Result<u32> {
    b.to_u32().ok_or(Error::EnumerationCapExceeded { cap: u32::MAX as usize })
}

/// Colors available in the first row of a part of length `len + 1`.
fn first_budget(spec: &WeightSpec) -> Result<u32> {
    to_budget(int_value(spec, 0)?)
}

/// Colors available in each of the other `len` rows: `(f(len) - f(0)) / len`.
fn interior_budget(spec: &WeightSpec, len: i64) -> Result<u32> {
    if len <= 0 {
        return Ok(0);
    }
    let diff = int_value(spec, len)? - int_value(spec, 0)?;
    let d = BigInt::from(len);
    if !(&diff % &d).is_zero() {
        return Err(Error::InexactDivision { value: diff.to_string(), divisor: d.to_string() });
    }
    to_budget(diff / d)
}

fn require_combinatorial(weights: &WeightPair) -> Result<()> {
    if weights.is_combinatorial() {
        Ok(())
    } else {
        Err(Error::NonCombinatorialWeights(weights.label()))
    }
}

fn require_combinatorial_spec(v: &WeightSpec) -> Result<()> {
    if v.is_combinatorial() {
        Ok(())
    } else {
        Err(Error::NonCombinatorialWeights(v.to_string()))
    }
}

fn natural_height(shape: &BTableau) -> i64 {
    shape.column_sum().map_or(2, |s| s + 2)
}

/// A B-tableau shape drawn in a rectangle of `height` rows with one colored
/// 1 above and one below the lattice path in every column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroOneTableau {
    shape: BTableau,
    height: i64,
    marks: Vec<ColumnMarks>,
}

impl ZeroOneTableau {
    /// Checks that every mark lies in its column's part of the rectangle.
    pub fn new(shape: BTableau, height: i64, marks: Vec<ColumnMarks>) -> Result<ZeroOneTableau> {
        if marks.len() != shape.len() {
            return Err(Error::DomainViolation(format!(
                "{} marks for {} columns",
                marks.len(),
                shape.len()
            )));
        }
        if shape.column_sum().is_some_and(|s| s + 2 != height) || (!shape.is_empty() && shape.column_sum().is_none())
        {
            return Err(Error::DomainViolation(format!("shape {shape} does not fit height {height}")));
        }
        for (c, m) in shape.columns().iter().zip(&marks) {
            let above = 1..=c.top + 1;
            let below = c.top + 2..=height;
            if !above.contains(&m.above.row) || !below.contains(&m.below.row) || m.above.color == 0 || m.below.color == 0
            {
                return Err(Error::DomainViolation(format!("marks {m:?} do not fit column {c:?}")));
            }
        }
        Ok(ZeroOneTableau { shape, height, marks })
    }

    pub fn shape(&self) -> &BTableau {
        &self.shape
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    /// Marks of the columns from left to right.
    pub fn marks(&self) -> &[ColumnMarks] {
        &self.marks
    }

    /// The full lattice path from the upper-right corner, including the final step.
    pub fn path(&self) -> Vec<Step> {
        let mut steps = Vec::new();
        let mut depth = 0;
        for c in self.shape.columns().iter().rev() {
            while depth < c.top + 1 {
                steps.push(Step::V);
                depth += 1;
            }
            steps.push(Step::H);
        }
        while depth < self.height {
            steps.push(Step::V);
            depth += 1;
        }
        steps
    }

    pub fn path_string(&self) -> String {
        render_steps(&self.path())
    }

    /// Whether all colors respect the budgets of `weights`.
    pub fn respects_budgets(&self, weights: &WeightPair) -> Result<bool> {
        for (c, m) in self.shape.columns().iter().zip(&self.marks) {
            let above = if m.above.row == 1 {
                first_budget(&weights.v)?
            } else {
                interior_budget(&weights.v, c.top)?
            };
            let below = if m.below.row == self.height {
                first_budget(&weights.w)?
            } else {
                interior_budget(&weights.w, c.bottom)?
            };
            if m.above.color > above || m.below.color > below {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Marks of the column crossed by the `j`-th horizontal step (0-based).
    fn marks_of_step(&self, j: usize) -> &ColumnMarks {
        &self.marks[self.marks.len() - 1 - j]
    }
}

impl fmt::Display for ZeroOneTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.shape)?;
        let marks: Vec<String> = self
            .marks
            .iter()
            .map(|m| format!("{}_{}/{}_{}", m.above.row, m.above.color, m.below.row, m.below.color))
            .collect();
        write!(f, "marks={} path={}", marks.join(","), self.path_string())
    }
}

/// `prod_j v(top_j) w(bottom_j)` as an integer.
pub fn count_01v(shape: &BTableau, weights: &WeightPair) -> Result<BigInt> {
    require_combinatorial(weights)?;
    let mut acc = BigInt::one();
    for c in shape.columns() {
        acc *= int_value(&weights.v, c.top)? * int_value(&weights.w, c.bottom)?;
    }
    Ok(acc)
}

fn part_options(spec: &WeightSpec, len: i64, first_row: i64, step: i64) -> Result<Vec<Mark>> {
    // rows of the part listed from the one next to the rectangle edge
    let mut out = Vec::new();
    for color in 1..=first_budget(spec)? {
        out.push(Mark { row: first_row, color });
    }
    let interior = interior_budget(spec, len)?;
    for t in 1..=len {
        for color in 1..=interior {
            out.push(Mark { row: first_row + step * t, color });
        }
    }
    Ok(out)
}

fn column_options(c: &Column, height: i64, weights: &WeightPair) -> Result<Vec<ColumnMarks>> {
    let mut above = part_options(&weights.v, c.top, 1, 1)?;
    above.sort();
    let mut below = part_options(&weights.w, c.bottom, height, -1)?;
    below.sort();
    let mut out = Vec::with_capacity(above.len() * below.len());
    for a in &above {
        for b in &below {
            out.push(ColumnMarks { above: *a, below: *b });
        }
    }
    Ok(out)
}

/// Calls `f` on every 0,1_V-tableau of the given shape and height.
pub fn for_each_01v<F>(shape: &BTableau, height: i64, weights: &WeightPair, mut f: F) -> Result<()>
where
    F: FnMut(&ZeroOneTableau),
{
    require_combinatorial(weights)?;
    let options: Vec<Vec<ColumnMarks>> = shape
        .columns()
        .iter()
        .map(|c| column_options(c, height, weights))
        .collect::<Result<_>>()?;
    if options.iter().any(Vec::is_empty) {
        return Ok(());
    }
    let mut idx = vec![0usize; options.len()];
    let mut t = ZeroOneTableau::new(
        shape.clone(),
        height,
        options.iter().map(|o| o[0]).collect(),
    )?;
    loop {
        f(&t);
        // odometer, rightmost column fastest
        let mut pos = options.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                t.marks[pos] = options[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            t.marks[pos] = options[pos][0];
        }
    }
}

/// All 0,1_V-tableaux of `shape` in a rectangle of `height` rows.
pub fn enumerate_01v_in(shape: &BTableau, height: i64, weights: &WeightPair, cap: usize) -> Result<Vec<ZeroOneTableau>> {
    let count = count_01v(shape, weights)?;
    if count > BigInt::from(cap) {
        return Err(Error::EnumerationCapExceeded { cap });
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    for_each_01v(shape, height, weights, |t| out.push(t.clone()))?;
    Ok(out)
}

/// All 0,1_V-tableaux of `shape`; the rectangle has two more rows than the
/// column sum (two rows for the empty shape).
pub fn enumerate_01v(shape: &BTableau, weights: &WeightPair) -> Result<Vec<ZeroOneTableau>> {
    enumerate_01v_in(shape, natural_height(shape), weights, DEFAULT_CAP)
}

/// Number of 0,1_V-tableaux of `shape` found by walking the enumeration.
pub fn count_01v_by_enumeration(shape: &BTableau, weights: &WeightPair) -> Result<BigInt> {
    let mut n = 0u64;
    for_each_01v(shape, natural_height(shape), weights, |_| n += 1)?;
    Ok(BigInt::from(n))
}

/// An element of `[n]_0` with its color; minima carry none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Colored {
    pub value: i64,
    pub color: Option<u32>,
}

impl Colored {
    fn plain(value: i64) -> Colored {
        Colored { value, color: None }
    }

    fn with_color(value: i64, color: u32) -> Colored {
        Colored { value, color: Some(color) }
    }
}

impl fmt::Display for Colored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color {
            Some(c) => write!(f, "{}_{c}", self.value),
            None => write!(f, "{}", self.value),
        }
    }
}

fn check_ground_set(groups: &[Vec<Colored>]) -> Result<i64> {
    let mut seen: Vec<i64> = groups.iter().flatten().map(|c| c.value).collect();
    seen.sort_unstable();
    if seen.iter().enumerate().any(|(i, &v)| v != i as i64) {
        return Err(Error::DomainViolation(format!("elements {seen:?} are not 0..n")));
    }
    Ok(seen.len() as i64 - 1)
}

fn colors_only_off_minima(groups: &[Vec<Colored>], min_of: impl Fn(&[Colored]) -> i64) -> Result<()> {
    for g in groups {
        let m = min_of(g);
        for c in g {
            if (c.value == m) != c.color.is_none() || c.color == Some(0) {
                return Err(Error::DomainViolation(format!("element {c} has the wrong color status")));
            }
        }
    }
    Ok(())
}

/// Blocks `B_0, ..., B_k` of `[n]_0` with `0 in B_0`, ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredPartition {
    blocks: Vec<Vec<Colored>>,
}

impl ColoredPartition {
    /// Sorts elements inside blocks and blocks by minimum.
    pub fn new(mut blocks: Vec<Vec<Colored>>) -> Result<ColoredPartition> {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort_by_key(|b| b[0].value);
        check_ground_set(&blocks)?;
        colors_only_off_minima(&blocks, |b| b[0].value)?;
        Ok(ColoredPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Colored>] {
        &self.blocks
    }

    /// Largest element `n`.
    pub fn n(&self) -> i64 {
        self.blocks.iter().flatten().count() as i64 - 1
    }

    pub fn minima(&self) -> Vec<i64> {
        self.blocks.iter().map(|b| b[0].value).collect()
    }

    fn block_of(&self, x: i64) -> usize {
        self.blocks.iter().position(|b| b.iter().any(|c| c.value == x)).expect("element present")
    }

    /// The `j`-th non-minimum `a_j` (1-based, increasing) may take `v(0)`
    /// colors in `B_0` and `(v(a_j-j) - v(0)) / (a_j-j)` elsewhere.
    pub fn respects_budgets(&self, v: &WeightSpec) -> Result<bool> {
        let mut nonmin: Vec<(i64, u32, usize)> = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            for c in &block[1..] {
                nonmin.push((c.value, c.color.unwrap_or(0), b));
            }
        }
        nonmin.sort_unstable();
        for (j, &(a, color, b)) in nonmin.iter().enumerate() {
            let budget = if b == 0 {
                first_budget(v)?
            } else {
                interior_budget(v, a - (j as i64 + 1))?
            };
            if color > budget {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `1..=alpha` are block minima and the `beta` largest elements are singletons.
    pub fn satisfies_restriction(&self, alpha: i64, beta: i64) -> bool {
        let n = self.n();
        let minima: BTreeSet<i64> = self.minima().into_iter().collect();
        (1..=alpha).all(|x| minima.contains(&x))
            && (n - beta + 1..=n).all(|x| x >= 0 && self.blocks[self.block_of(x)].len() == 1)
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(Colored::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// Cycles `C_0, ..., C_k` of a permutation of `[n]_0`, each written from its
/// minimum and ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredPermutation {
    cycles: Vec<Vec<Colored>>,
}

impl ColoredPermutation {
    /// Rotates every cycle to start at its minimum and sorts cycles by minimum.
    pub fn new(mut cycles: Vec<Vec<Colored>>) -> Result<ColoredPermutation> {
        cycles.retain(|c| !c.is_empty());
        for c in &mut cycles {
            let pos = c.iter().enumerate().min_by_key(|(_, x)| x.value).map(|(i, _)| i).unwrap_or(0);
            c.rotate_left(pos);
        }
        cycles.sort_by_key(|c| c[0].value);
        check_ground_set(&cycles)?;
        colors_only_off_minima(&cycles, |c| c[0].value)?;
        Ok(ColoredPermutation { cycles })
    }

    pub fn cycles(&self) -> &[Vec<Colored>] {
        &self.cycles
    }

    pub fn n(&self) -> i64 {
        self.cycles.iter().flatten().count() as i64 - 1
    }

    pub fn minima(&self) -> Vec<i64> {
        self.cycles.iter().map(|c| c[0].value).collect()
    }

    /// The underlying map `x -> image of x` as a vector indexed by `x`.
    pub fn as_map(&self) -> Vec<i64> {
        let mut map = vec![0; (self.n() + 1) as usize];
        for c in &self.cycles {
            for (i, x) in c.iter().enumerate() {
                map[x.value as usize] = c[(i + 1) % c.len()].value;
            }
        }
        map
    }

    /// Non-minima inserted directly after 0: the left-to-right minima of `C_0`
    /// read after 0. They take `v(0)` colors; any other non-minimum `a` takes
    /// `(v(a-1) - v(0)) / (a-1)`.
    pub fn respects_budgets(&self, v: &WeightSpec) -> Result<bool> {
        let mut after_zero = BTreeSet::new();
        let mut low = i64::MAX;
        for c in &self.cycles[0][1..] {
            if c.value < low {
                low = c.value;
                after_zero.insert(c.value);
            }
        }
        for cycle in &self.cycles {
            for c in &cycle[1..] {
                let budget = if after_zero.contains(&c.value) {
                    first_budget(v)?
                } else {
                    interior_budget(v, c.value - 1)?
                };
                if c.color.unwrap_or(0) > budget {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `1..=alpha` are cycle minima and the `beta` largest elements are fixed points.
    pub fn satisfies_restriction(&self, alpha: i64, beta: i64) -> bool {
        let n = self.n();
        let minima: BTreeSet<i64> = self.minima().into_iter().collect();
        let map = self.as_map();
        (1..=alpha).all(|x| minima.contains(&x)) && (n - beta + 1..=n).all(|x| x >= 0 && map[x as usize] == x)
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let items: Vec<String> = c.iter().map(Colored::to_string).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

/// Reads the labeled path: a vertical step opens a block, a horizontal step
/// joins the block numbered by its column's upper 1 and takes that color.
/// The final step is not labeled and the lower 1s are not recorded.
pub fn to_partition(t: &ZeroOneTableau) -> ColoredPartition {
    let path = t.path();
    let mut blocks: Vec<Vec<Colored>> = Vec::new();
    let mut h = 0;
    for (label, step) in path[..path.len() - 1].iter().enumerate() {
        let label = label as i64;
        match step {
            Step::V => blocks.push(vec![Colored::plain(label)]),
            Step::H => {
                let m = t.marks_of_step(h).above;
                blocks[(m.row - 1) as usize].push(Colored::with_color(label, m.color));
                h += 1;
            }
        }
    }
    ColoredPartition { blocks }
}

fn build_tableau(height: i64, tops_right_to_left: Vec<(i64, Mark)>) -> Result<ZeroOneTableau> {
    let below = Mark { row: height, color: 1 };
    let mut columns = Vec::new();
    let mut marks = Vec::new();
    for (top, above) in tops_right_to_left.into_iter().rev() {
        columns.push(Column::new(top, height - 2 - top));
        marks.push(ColumnMarks { above, below });
    }
    let shape = BTableau::from_columns(columns.clone());
    if shape.columns() != columns.as_slice() {
        return Err(Error::DomainViolation("labels do not describe a lattice path".into()));
    }
    ZeroOneTableau::new(shape, height, marks)
}

/// Inverse of [`to_partition`]; every lower 1 goes to the last row with color 1.
pub fn from_partition(p: &ColoredPartition) -> Result<ZeroOneTableau> {
    let height = p.blocks.len() as i64 + 1;
    let mut steps: Vec<(i64, Mark)> = Vec::new();
    for label in 1..=p.n() {
        let b = p.block_of(label);
        let c = p.blocks[b].iter().find(|c| c.value == label).expect("element present");
        if let Some(color) = c.color {
            let j = steps.len() as i64;
            steps.push((label - j - 1, Mark { row: b as i64 + 1, color }));
        }
    }
    build_tableau(height, steps)
}

/// Removes one vertical step after every horizontal one, labels the remaining
/// steps, and inserts each horizontal label after the letter numbered by its
/// column's upper 1 in the word of minima.
pub fn to_permutation(t: &ZeroOneTableau) -> ColoredPermutation {
    let path = t.path();
    let mut reduced = Vec::with_capacity(path.len());
    let mut skip = false;
    for &s in &path {
        if skip && s == Step::V {
            skip = false;
            continue;
        }
        skip = s == Step::H;
        reduced.push(s);
    }
    let mut word: Vec<Colored> = Vec::new();
    let mut inserts = Vec::new();
    for (label, step) in reduced.iter().enumerate() {
        let label = label as i64;
        match step {
            Step::V => word.push(Colored::plain(label)),
            Step::H => {
                let m = t.marks_of_step(inserts.len()).above;
                inserts.push((label, m));
            }
        }
    }
    let minima: BTreeSet<i64> = word.iter().map(|c| c.value).collect();
    for (label, m) in inserts {
        word.insert(m.row as usize, Colored::with_color(label, m.color));
    }
    let mut cycles: Vec<Vec<Colored>> = Vec::new();
    for c in word {
        if minima.contains(&c.value) {
            cycles.push(vec![c]);
        } else {
            cycles.last_mut().expect("word starts with 0").push(c);
        }
    }
    ColoredPermutation { cycles }
}

/// Inverse of [`to_permutation`]; every lower 1 goes to the last row with color 1.
pub fn from_permutation(p: &ColoredPermutation) -> Result<ZeroOneTableau> {
    let n = p.n();
    let height = n + 1;
    let minima: BTreeSet<i64> = p.minima().into_iter().collect();
    let word: Vec<Colored> = p.cycles.iter().flatten().copied().collect();
    let mut steps: Vec<(i64, Mark)> = Vec::new();
    for label in 1..=n {
        if minima.contains(&label) {
            continue;
        }
        let present: Vec<&Colored> = word.iter().filter(|c| minima.contains(&c.value) || c.value <= label).collect();
        let pos = present.iter().position(|c| c.value == label).expect("element present");
        let color = present[pos].color.expect("non-minima are colored");
        steps.push((label - 1, Mark { row: pos as i64, color }));
    }
    build_tableau(height, steps)
}

fn cap_check<T>(out: &[T], cap: usize) -> Result<()> {
    if out.len() >= cap {
        Err(Error::EnumerationCapExceeded { cap })
    } else {
        Ok(())
    }
}

struct PartGen {
    n: i64,
    k: i64,
    first: u32,
    interior: Vec<u32>,
    cap: usize,
}

impl PartGen {
    fn interior(&self, len: i64) -> u32 {
        self.interior[len as usize]
    }

    fn run(&self, i: i64, nonmin: i64, blocks: &mut Vec<Vec<Colored>>, out: &mut Vec<ColoredPartition>) -> Result<()> {
        let open = self.k + 1 - blocks.len() as i64;
        if open > self.n - i + 1 {
            return Ok(());
        }
        if i > self.n {
            cap_check(out, self.cap)?;
            out.push(ColoredPartition { blocks: blocks.clone() });
            return Ok(());
        }
        if open > 0 {
            blocks.push(vec![Colored::plain(i)]);
            self.run(i + 1, nonmin, blocks, out)?;
            blocks.pop();
        }
        for b in 0..blocks.len() {
            let budget = if b == 0 { self.first } else { self.interior(i - nonmin - 1) };
            for color in 1..=budget {
                blocks[b].push(Colored::with_color(i, color));
                self.run(i + 1, nonmin + 1, blocks, out)?;
                blocks[b].pop();
            }
        }
        Ok(())
    }
}

fn interior_table(v: &WeightSpec, n: i64) -> Result<Vec<u32>> {
    (0..=n.max(0)).map(|len| interior_budget(v, len)).collect()
}

/// `Part(n,k;v)`: colored partitions of `[n]_0` into `k+1` blocks.
pub fn enumerate_part_capped(n: i64, k: i64, v: &WeightSpec, cap: usize) -> Result<Vec<ColoredPartition>> {
    require_combinatorial_spec(v)?;
    let mut out = Vec::new();
    if n < 0 || k < 0 || k > n {
        return Ok(out);
    }
    let g = PartGen { n, k, first: first_budget(v)?, interior: interior_table(v, n)?, cap };
    g.run(1, 0, &mut vec![vec![Colored::plain(0)]], &mut out)?;
    Ok(out)
}

pub fn enumerate_part(n: i64, k: i64, v: &WeightSpec) -> Result<Vec<ColoredPartition>> {
    enumerate_part_capped(n, k, v, DEFAULT_CAP)
}

struct PermGen {
    n: i64,
    k: i64,
    first: u32,
    interior: Vec<u32>,
    cap: usize,
}

impl PermGen {
    fn run(&self, i: i64, cycles: &mut Vec<Vec<Colored>>, out: &mut Vec<ColoredPermutation>) -> Result<()> {
        let open = self.k + 1 - cycles.len() as i64;
        if open > self.n - i + 1 {
            return Ok(());
        }
        if i > self.n {
            cap_check(out, self.cap)?;
            out.push(ColoredPermutation { cycles: cycles.clone() });
            return Ok(());
        }
        if open > 0 {
            cycles.push(vec![Colored::plain(i)]);
            self.run(i + 1, cycles, out)?;
            cycles.pop();
        }
        for c in 0..cycles.len() {
            for pos in 0..cycles[c].len() {
                let budget = if c == 0 && pos == 0 { self.first } else { self.interior[(i - 1) as usize] };
                for color in 1..=budget {
                    cycles[c].insert(pos + 1, Colored::with_color(i, color));
                    self.run(i + 1, cycles, out)?;
                    cycles[c].remove(pos + 1);
                }
            }
        }
        Ok(())
    }
}

/// `Perm(n,k;v)`: colored permutations of `[n]_0` with `k+1` cycles, built by
/// inserting `1, 2, ..., n` in turn.
pub fn enumerate_perm_capped(n: i64, k: i64, v: &WeightSpec, cap: usize) -> Result<Vec<ColoredPermutation>> {
    require_combinatorial_spec(v)?;
    let mut out = Vec::new();
    if n < 0 || k < 0 || k > n {
        return Ok(out);
    }
    let g = PermGen { n, k, first: first_budget(v)?, interior: interior_table(v, n)?, cap };
    g.run(1, &mut vec![vec![Colored::plain(0)]], &mut out)?;
    Ok(out)
}

pub fn enumerate_perm(n: i64, k: i64, v: &WeightSpec) -> Result<Vec<ColoredPermutation>> {
    enumerate_perm_capped(n, k, v, DEFAULT_CAP)
}

/// Blocks `D_0, ..., D_k` of `{0, ±1, ..., ±n}`: `0 in D_0`, `D_0` holds at
/// most one copy of each integer, and every other block holds both copies of
/// its minimum and one copy of everything else.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPartition {
    blocks: Vec<Vec<i64>>,
}

fn signed_order(x: &i64) -> (i64, bool) {
    (x.abs(), *x < 0)
}

impl SignedPartition {
    pub fn new(mut blocks: Vec<Vec<i64>>) -> Result<SignedPartition> {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_by_key(signed_order);
        }
        blocks.sort_by_key(|b| b[0].abs());
        let p = SignedPartition { blocks };
        if !p.is_valid() {
            return Err(Error::DomainViolation(format!("{p} is not a signed partition")));
        }
        Ok(p)
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }

    fn is_valid(&self) -> bool {
        let mut all: Vec<i64> = self.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let n = all.len() as i64 / 2;
        if all != (-n..=n).collect::<Vec<_>>() || self.blocks[0][0] != 0 {
            return false;
        }
        let doubled = |b: &[i64]| {
            b.iter().filter(|x| **x > 0 && b.contains(&-**x)).map(|x| x.abs()).collect::<Vec<_>>()
        };
        doubled(&self.blocks[0]).is_empty()
            && self.blocks[1..].iter().all(|b| doubled(b) == vec![b[0].abs()])
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(i64::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

fn signed_run(
    m: i64,
    n: i64,
    k: i64,
    blocks: &mut Vec<Vec<i64>>,
    cap: usize,
    out: &mut Vec<SignedPartition>,
) -> Result<()> {
    let open = k + 1 - blocks.len() as i64;
    if open > n - m + 1 {
        return Ok(());
    }
    if m > n {
        cap_check(out, cap)?;
        let mut bs = blocks.clone();
        for b in &mut bs {
            b.sort_by_key(signed_order);
        }
        out.push(SignedPartition { blocks: bs });
        return Ok(());
    }
    if open > 0 {
        blocks.push(vec![m, -m]);
        signed_run(m + 1, n, k, blocks, cap, out)?;
        blocks.pop();
    }
    for a in 0..blocks.len() {
        for b in 0..blocks.len() {
            if a == b {
                continue;
            }
            blocks[a].push(m);
            blocks[b].push(-m);
            signed_run(m + 1, n, k, blocks, cap, out)?;
            blocks[b].pop();
            blocks[a].pop();
        }
    }
    Ok(())
}

/// `Part±(n,k)`: signed partitions with `k` blocks besides `D_0`.
pub fn enumerate_signed_partitions_capped(n: i64, k: i64, cap: usize) -> Result<Vec<SignedPartition>> {
    let mut out = Vec::new();
    if n < 0 || k < 0 || k > n {
        return Ok(out);
    }
    signed_run(1, n, k, &mut vec![vec![0]], cap, &mut out)?;
    Ok(out)
}

pub fn enumerate_signed_partitions(n: i64, k: i64) -> Result<Vec<SignedPartition>> {
    enumerate_signed_partitions_capped(n, k, DEFAULT_CAP)
}

/// Shapes indexed like the Stirling numbers: `T_{a,b}[k,n-k]` for the second
/// kind and `Td_{a,b}[n-1,n-k]` for the first.
pub fn shapes(kind: Kind, n: i64, k: i64, alpha: i64, beta: i64) -> Result<(i64, Vec<BTableau>)> {
    match kind {
        Kind::Second => Ok((alpha + beta + k + 2, enumerate_t(alpha, beta, k, n - k)?)),
        Kind::First => Ok((alpha + beta + n + 1, enumerate_td(alpha, beta, n - 1, n - k)?)),
    }
}

/// Sum of [`count_01v_by_enumeration`] over [`shapes`] against the definition.
pub fn shape_count_check(kind: Kind, n: i64, k: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<bool> {
    let (_, list) = shapes(kind, n, k, alpha, beta)?;
    let mut total = BigInt::zero();
    for shape in &list {
        let walked = count_01v_by_enumeration(shape, weights)?;
        if walked != count_01v(shape, weights)? {
            return Ok(false);
        }
        total += walked;
    }
    let expected = def(kind, weights, alpha, beta, n, k)?;
    Ok(expected.as_integer() == Some(&total))
}

/// Checks that the tableau-to-partition (second kind) or tableau-to-permutation
/// (first kind) map is injective on all 0,1_V-tableaux of the shapes for
/// `(n, k, alpha, beta)` with `V = (v, 1)`, inverts correctly, lands in the
/// restricted colored family, and hits all of it.
pub fn bijection_check(kind: Kind, n: i64, k: i64, alpha: i64, beta: i64, v: &WeightSpec) -> Result<bool> {
    let weights = WeightPair::new(v.clone(), WeightSpec::constant(1));
    let (height, list) = shapes(kind, n, k, alpha, beta)?;
    let big_n = n + alpha + beta;
    let big_k = k + alpha + beta;
    let mut ok = true;
    let mut images = BTreeSet::new();
    for shape in &list {
        for_each_01v(shape, height, &weights, |t| {
            let (image, back, valid) = match kind {
                Kind::Second => {
                    let p = to_partition(t);
                    let valid = p.satisfies_restriction(alpha, beta)
                        && p.respects_budgets(v).unwrap_or(false)
                        && p.n() == big_n
                        && p.blocks.len() as i64 == big_k + 1;
                    (p.to_string(), from_partition(&p), valid)
                }
                Kind::First => {
                    let p = to_permutation(t);
                    let valid = p.satisfies_restriction(alpha, beta)
                        && p.respects_budgets(v).unwrap_or(false)
                        && p.n() == big_n
                        && p.cycles.len() as i64 == big_k + 1;
                    (p.to_string(), from_permutation(&p), valid)
                }
            };
            ok &= valid && back.as_ref() == Ok(t) && images.insert(image);
        })?;
    }
    let target: usize = match kind {
        Kind::Second => enumerate_part(big_n, big_k, v)?
            .iter()
            .filter(|p| p.satisfies_restriction(alpha, beta))
            .count(),
        Kind::First => enumerate_perm(big_n, big_k, v)?
            .iter()
            .filter(|p| p.satisfies_restriction(alpha, beta))
            .count(),
    };
    Ok(ok && images.len() == target)
}

/// Weight families whose `v` factors into simpler combinatorial weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleFamily {
    /// `v(i) = i^m`, a product of `m` copies of `i`.
    Sun(u32),
    /// `v(i) = (i + a_1) ... (i + a_j)`.
    ProductShifted(Vec<i64>),
}

impl TupleFamily {
    fn factors(&self) -> Vec<WeightSpec> {
        match self {
            TupleFamily::Sun(m) => (0..*m).map(|_| WeightSpec::identity()).collect(),
            TupleFamily::ProductShifted(a) => a.iter().map(|&a| WeightSpec::polynomial([a, 1])).collect(),
        }
    }

    fn combined(&self) -> WeightSpec {
        match self {
            TupleFamily::Sun(m) => {
                let mut coeffs = vec![0i64; *m as usize + 1];
                coeffs[*m as usize] = 1;
                WeightSpec::polynomial(coeffs)
            }
            TupleFamily::ProductShifted(a) => WeightSpec::product_shifted(a.clone()),
        }
    }
}

/// For every shape of both kinds at `(n, k)`, the number of 0,1_V-tableaux
/// for the combined weight equals the number of tuples of single-factor
/// tableaux of that same shape.
pub fn tuple_decomposition_check(family: &TupleFamily, n: i64, k: i64) -> Result<bool> {
    let one = || WeightSpec::constant(1);
    let combined = WeightPair::new(family.combined(), one());
    let factors: Vec<WeightPair> = family.factors().into_iter().map(|f| WeightPair::new(f, one())).collect();
    for kind in [Kind::First, Kind::Second] {
        let (_, list) = shapes(kind, n, k, 0, 0)?;
        let mut total = BigInt::zero();
        for shape in &list {
            let mut tuples = BigInt::one();
            for f in &factors {
                tuples *= count_01v_by_enumeration(shape, f)?;
            }
            if count_01v_by_enumeration(shape, &combined)? != tuples {
                return Ok(false);
            }
            total += tuples;
        }
        if def(kind, &combined, 0, 0, n, k)?.as_integer() != Some(&total) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Colored objects for `v = i + m` against uncolored ones for `v = i` on
/// `m` more elements with `1..=m` as minima, together with the images of the
/// shifted-shape tableaux.
pub fn merris_koutras_check(kind: Kind, m: i64, n: i64, k: i64) -> Result<bool> {
    let shifted = WeightSpec::polynomial([m, 1]);
    let plain = WeightSpec::identity();
    let (direct, restricted) = match kind {
        Kind::First => (
            enumerate_perm(n, k, &shifted)?.len(),
            enumerate_perm(n + m, k + m, &plain)?
                .iter()
                .filter(|p| p.satisfies_restriction(m, 0))
                .count(),
        ),
        Kind::Second => (
            enumerate_part(n, k, &shifted)?.len(),
            enumerate_part(n + m, k + m, &plain)?
                .iter()
                .filter(|p| p.satisfies_restriction(m, 0))
                .count(),
        ),
    };
    Ok(direct == restricted && bijection_check(kind, n, k, m, 0, &plain)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{classical_first, classical_second, legendre_stirling};
    use crate::weights::builtin;

    fn fig_weights() -> WeightPair {
        WeightPair::new(WeightSpec::polynomial([4, 2]), WeightSpec::constant(1))
    }

    fn mark(row: i64, color: u32, height: i64) -> ColumnMarks {
        ColumnMarks { above: Mark { row, color }, below: Mark { row: height, color: 1 } }
    }

    fn phi() -> ZeroOneTableau {
        let shape: BTableau = "[3,1,1;2,4,4]".parse().unwrap();
        ZeroOneTableau::new(shape, 7, vec![mark(3, 2, 7), mark(1, 3, 7), mark(2, 1, 7)]).unwrap()
    }

    fn psi() -> ZeroOneTableau {
        let shape: BTableau = "[3,1,0;2,4,5]".parse().unwrap();
        ZeroOneTableau::new(shape, 7, vec![mark(4, 1, 7), mark(2, 1, 7), mark(1, 4, 7)]).unwrap()
    }

    #[test]
    fn example_partition() {
        let t = phi();
        assert_eq!(t.path_string(), "VVHHVVHVVV");
        assert!(t.respects_budgets(&fig_weights()).unwrap());
        let p = to_partition(&t);
        assert_eq!(p.to_string(), "{0,3_3}{1,2_1}{4,6_2}{5}{7}{8}");
        assert_eq!(from_partition(&p).unwrap(), t);
    }

    #[test]
    fn example_permutation() {
        let t = psi();
        assert_eq!(t.path_string(), "VHVHVVHVVV");
        assert!(t.respects_budgets(&fig_weights()).unwrap());
        let p = to_permutation(&t);
        assert_eq!(p.to_string(), "(0 1_4 2_1)(3 4_1)(5)(6)");
        assert_eq!(p.as_map(), vec![1, 2, 0, 4, 3, 5, 6]);
        assert_eq!(from_permutation(&p).unwrap(), t);
    }

    #[test]
    fn counts_and_enumerations() {
        let shape: BTableau = "[3,1,1;2,4,4]".parse().unwrap();
        assert_eq!(count_01v(&shape, &fig_weights()).unwrap(), BigInt::from(360));
        assert_eq!(enumerate_01v(&shape, &fig_weights()).unwrap().len(), 360);
        let classical = builtin("classical").unwrap();
        let two: BTableau = "[2;0]".parse().unwrap();
        let ts = enumerate_01v(&two, &classical).unwrap();
        assert_eq!(ts.iter().map(|t| t.marks()[0].above.row).collect::<Vec<_>>(), vec![2, 3]);
        let ones = WeightPair::new(WeightSpec::constant(1), WeightSpec::constant(1));
        assert_eq!(enumerate_01v(&"[1;1]".parse().unwrap(), &ones).unwrap().len(), 1);
        assert_eq!(enumerate_01v(&BTableau::empty(), &classical).unwrap().len(), 1);
        assert!(matches!(
            count_01v(&two, &builtin("jacobi").unwrap()),
            Err(Error::NonCombinatorialWeights(_))
        ));
        let set: BTreeSet<_> = enumerate_01v(&shape, &fig_weights()).unwrap().into_iter().collect();
        assert_eq!(set.len(), 360);
    }

    #[test]
    fn colored_families() {
        let i = WeightSpec::identity();
        let fig = WeightSpec::polynomial([4, 2]);
        assert_eq!(enumerate_part(4, 2, &i).unwrap().len(), 7);
        assert_eq!(enumerate_part(2, 1, &fig).unwrap().len(), 10);
        assert_eq!(enumerate_part(3, 3, &fig).unwrap().len(), 1);
        assert_eq!(enumerate_perm(2, 1, &i).unwrap().len(), 1);
        assert_eq!(enumerate_perm(4, 2, &i).unwrap().len(), 11);
        assert_eq!(enumerate_perm(3, 1, &fig).unwrap().len(), 104);
        for n in 0..=4 {
            for k in 0..=n {
                assert_eq!(BigInt::from(enumerate_part(n, k, &i).unwrap().len()), classical_second(n, k));
                assert_eq!(BigInt::from(enumerate_perm(n, k, &i).unwrap().len()), classical_first(n, k));
            }
        }
        assert!(enumerate_part(2, 1, &WeightSpec::polynomial([-1, 1])).is_err());
    }

    #[test]
    fn signed_partitions() {
        let two: Vec<String> = enumerate_signed_partitions(2, 1).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(two, ["{0,2}{1,-1,-2}", "{0,-2}{1,-1,2}"]);
        for n in 0..=4 {
            for k in 0..=n {
                let got = enumerate_signed_partitions(n, k).unwrap();
                assert_eq!(BigInt::from(got.len()), legendre_stirling(n, k), "n={n} k={k}");
                for p in &got {
                    assert_eq!(&SignedPartition::new(p.blocks.clone()).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn bijections_small() {
        let fig = WeightSpec::polynomial([4, 2]);
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            for n in 0..=3 {
                for k in 0..=n {
                    assert!(bijection_check(Kind::Second, n, k, a, b, &fig).unwrap(), "S n={n} k={k} a={a} b={b}");
                    assert!(bijection_check(Kind::First, n, k, a, b, &fig).unwrap(), "c n={n} k={k} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn round_trips() {
        let fig = WeightSpec::polynomial([4, 2]);
        for p in enumerate_part(4, 2, &fig).unwrap() {
            assert_eq!(to_partition(&from_partition(&p).unwrap()), p);
        }
        for p in enumerate_perm(3, 2, &WeightSpec::identity()).unwrap() {
            assert_eq!(to_permutation(&from_permutation(&p).unwrap()), p);
        }
    }

    #[test]
    fn tuples_and_shifts() {
        assert!(tuple_decomposition_check(&TupleFamily::Sun(2), 3, 2).unwrap());
        assert!(tuple_decomposition_check(&TupleFamily::Sun(1), 3, 1).unwrap());
        assert!(tuple_decomposition_check(&TupleFamily::ProductShifted(vec![0, 1]), 3, 2).unwrap());
        for m in 1..=2 {
            assert!(merris_koutras_check(Kind::First, m, 3, 1).unwrap());
            assert!(merris_koutras_check(Kind::Second, m, 3, 1).unwrap());
        }
    }
}
