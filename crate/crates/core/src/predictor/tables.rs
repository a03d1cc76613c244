//! Parameter tables guaranteeing the numerical hypotheses of the
//! small-ambient statements for two factors.

use serde::Serialize;

use super::{ambient_threshold, secant_dim_formula, FactorSignature, PredictorError, ThresholdMode};

/// Constraint on one of `d_X, d_Y, r, s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Entry {
    Any,
    Eq(u64),
    AtLeast(u64),
}

impl Entry {
    fn admits(self, v: u64) -> bool {
        match self {
            Entry::Any => v >= 1,
            Entry::Eq(e) => v == e,
            Entry::AtLeast(e) => v >= e,
        }
    }

    /// Values admitted by the entry, free ranges capped at `max`.
    fn values(self, max: u64) -> Vec<u64> {
        match self {
            Entry::Any => (1..=max).collect(),
            Entry::Eq(e) => vec![e],
            Entry::AtLeast(e) => (e..=max.max(e)).collect(),
        }
    }

    fn describe(self) -> String {
        match self {
            Entry::Any => "any".into(),
            Entry::Eq(e) => e.to_string(),
            Entry::AtLeast(e) => format!(">={e}"),
        }
    }
}

/// `a*r + b*s + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Affine {
    pub r: u64,
    pub s: u64,
    pub c: u64,
}

impl Affine {
    const fn new(r: u64, s: u64, c: u64) -> Self {
        Affine { r, s, c }
    }

    fn at(self, r: u64, s: u64) -> u64 {
        self.r * r + self.s * s + self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaTable {
    /// Rows where `N - (r+s) > r+s`, so the small regime forces `n > r+s`.
    SmallRegimeExceedsSum,
    /// Rows where `N - (r+s) >= dim sigma_2(S)`, so the small regime is smooth.
    SmallRegimeSmooth,
    /// Rows and ranges of `n` with `r+s < N-(r+s) <= n <= dim sigma_2(S)`,
    /// where a lower bound on the singular locus applies.
    SingularRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d_x: Entry,
    pub d_y: Entry,
    pub r: Entry,
    pub s: Entry,
    /// Inclusive range of `n`, for the singular-range table.
    pub n_range: Option<(Affine, Affine)>,
}

const fn row(d_x: Entry, d_y: Entry, r: Entry, s: Entry) -> TableRow {
    TableRow {
        d_x,
        d_y,
        r,
        s,
        n_range: None,
    }
}

const fn ranged(d_x: Entry, d_y: Entry, r: Entry, s: Entry, lo: Affine, hi: Affine) -> TableRow {
    TableRow {
        d_x,
        d_y,
        r,
        s,
        n_range: Some((lo, hi)),
    }
}

use Entry::{Any, AtLeast};

const fn eq(v: u64) -> Entry {
    Entry::Eq(v)
}

const EXCEEDS_SUM: [TableRow; 4] = [
    row(AtLeast(2), Any, Any, Any),
    row(Any, AtLeast(2), Any, Any),
    row(eq(1), eq(1), AtLeast(3), AtLeast(2)),
    row(eq(1), eq(1), AtLeast(2), AtLeast(3)),
];

const SMOOTH: [TableRow; 8] = [
    row(AtLeast(2), AtLeast(2), Any, Any),
    row(AtLeast(3), eq(1), Any, Any),
    row(eq(2), eq(1), AtLeast(2), Any),
    row(eq(1), AtLeast(3), Any, Any),
    row(eq(1), eq(2), Any, AtLeast(2)),
    row(eq(1), eq(1), eq(3), AtLeast(5)),
    row(eq(1), eq(1), eq(4), AtLeast(4)),
    row(eq(1), eq(1), eq(5), AtLeast(3)),
];

const SINGULAR_RANGE: [TableRow; 7] = [
    ranged(eq(2), eq(1), eq(1), Any, Affine::new(0, 2, 1), Affine::new(0, 2, 2)),
    ranged(eq(1), eq(2), Any, eq(1), Affine::new(2, 0, 1), Affine::new(2, 0, 2)),
    ranged(eq(1), eq(1), eq(2), AtLeast(3), Affine::new(0, 2, 0), Affine::new(0, 2, 2)),
    ranged(eq(1), eq(1), AtLeast(3), eq(2), Affine::new(2, 0, 0), Affine::new(2, 0, 2)),
    ranged(eq(1), eq(1), eq(3), eq(3), Affine::new(0, 0, 9), Affine::new(0, 0, 10)),
    ranged(eq(1), eq(1), eq(3), eq(4), Affine::new(0, 0, 12), Affine::new(0, 0, 12)),
    ranged(eq(1), eq(1), eq(4), eq(3), Affine::new(0, 0, 12), Affine::new(0, 0, 12)),
];

impl LemmaTable {
    pub const ALL: [LemmaTable; 3] = [
        LemmaTable::SmallRegimeExceedsSum,
        LemmaTable::SmallRegimeSmooth,
        LemmaTable::SingularRange,
    ];

    pub fn rows(self) -> &'static [TableRow] {
        match self {
            LemmaTable::SmallRegimeExceedsSum => &EXCEEDS_SUM,
            LemmaTable::SmallRegimeSmooth => &SMOOTH,
            LemmaTable::SingularRange => &SINGULAR_RANGE,
        }
    }
}

impl TableRow {
    fn admits(&self, d_x: u64, d_y: u64, r: u64, s: u64) -> bool {
        self.d_x.admits(d_x) && self.d_y.admits(d_y) && self.r.admits(r) && self.s.admits(s)
    }

    pub fn describe(&self) -> String {
        let mut out = format!(
            "d_X {}, d_Y {}, r {}, s {}",
            self.d_x.describe(),
            self.d_y.describe(),
            self.r.describe(),
            self.s.describe()
        );
        if let Some((lo, hi)) = self.n_range {
            let show = |a: Affine| match (a.r, a.s) {
                (0, 0) => a.c.to_string(),
                (k, 0) => format!("{k}r+{}", a.c),
                (0, k) => format!("{k}s+{}", a.c),
                _ => format!("{}r+{}s+{}", a.r, a.s, a.c),
            };
            out.push_str(&format!(", {} <= n <= {}", show(lo), show(hi)));
        }
        out
    }
}

/// One matching row with its inequality evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableHit {
    pub table: LemmaTable,
    pub row: usize,
    pub condition: String,
    pub statement: String,
    pub holds: bool,
}

fn evaluate(table: LemmaTable, d_x: u64, d_y: u64, r: u64, s: u64, n: Option<u64>) -> Result<(String, bool), PredictorError> {
    let sigs = [FactorSignature::new(r, d_x)?, FactorSignature::new(s, d_y)?];
    let big_n = ambient_threshold(&sigs, ThresholdMode::Parametric)?;
    let sum = r + s;
    let gap = big_n as i128 - sum as i128;
    Ok(match table {
        LemmaTable::SmallRegimeExceedsSum => (format!("N-(r+s) = {gap} > r+s = {sum}"), gap > sum as i128),
        LemmaTable::SmallRegimeSmooth => {
            let sigma = secant_dim_formula(&sigs)?;
            (format!("N-(r+s) = {gap} >= dim sigma_2 = {sigma}"), gap >= sigma as i128)
        }
        LemmaTable::SingularRange => {
            let sigma = secant_dim_formula(&sigs)?;
            let n = n.expect("singular-range rows need n");
            (
                format!("r+s = {sum} < N-(r+s) = {gap} <= n = {n} <= dim sigma_2 = {sigma}"),
                (sum as i128) < gap && gap <= n as i128 && n <= sigma,
            )
        }
    })
}

/// Rows of every table matching two factor signatures (and `n`, for the
/// singular-range table), with their inequality evaluated.
pub fn lemma_table_lookup(signatures: &[FactorSignature], n: Option<u64>) -> Result<Vec<TableHit>, PredictorError> {
    let [x, y] = signatures else {
        return Err(PredictorError::NeedsTwoFactors(signatures.len()));
    };
    let (d_x, d_y, r, s) = (x.d, y.d, x.r, y.r);
    let mut hits = Vec::new();
    for table in LemmaTable::ALL {
        for (i, row) in table.rows().iter().enumerate() {
            if !row.admits(d_x, d_y, r, s) {
                continue;
            }
            if let Some((lo, hi)) = row.n_range {
                match n {
                    Some(n) if lo.at(r, s) <= n && n <= hi.at(r, s) => {}
                    _ => continue,
                }
            }
            let (statement, holds) = evaluate(table, d_x, d_y, r, s, n)?;
            hits.push(TableHit {
                table,
                row: i,
                condition: row.describe(),
                statement,
                holds,
            });
        }
    }
    Ok(hits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max: u64,
    pub checked: usize,
    pub failures: Vec<TableHit>,
}

/// Evaluates every row of every table at all parameter values it admits,
/// free entries ranging over `1..=max` (and `n` over the row's range).
pub fn sweep_tables(max: u64) -> Result<SweepReport, PredictorError> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for table in LemmaTable::ALL {
        for (i, row) in table.rows().iter().enumerate() {
            for d_x in row.d_x.values(max) {
                for d_y in row.d_y.values(max) {
                    for r in row.r.values(max) {
                        for s in row.s.values(max) {
                            let ns: Vec<Option<u64>> = match row.n_range {
                                Some((lo, hi)) => (lo.at(r, s)..=hi.at(r, s)).map(Some).collect(),
                                None => vec![None],
                            };
                            for n in ns {
                                let (statement, holds) = evaluate(table, d_x, d_y, r, s, n)?;
                                checked += 1;
                                if !holds {
                                    failures.push(TableHit {
                                        table,
                                        row: i,
                                        condition: row.describe(),
                                        statement,
                                        holds,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(SweepReport { max, checked, failures })
}
