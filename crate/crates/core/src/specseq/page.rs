use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::series::PowerSeries;

/// One nonzero entry `E^{s,t}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub s: u64,
    pub t: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct PageRecord {
    page_index: u32,
    cutoff: u64,
    entries: Vec<PageEntry>,
}

/// A bigraded page, truncated at total degree `s + t <= cutoff`. Only
/// nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PageRecord", from = "PageRecord")]
pub struct BigradedPage {
    pub page_index: u32,
    pub cutoff: u64,
    entries: BTreeMap<(u64, u64), PageEntry>,
}

impl From<BigradedPage> for PageRecord {
    fn from(p: BigradedPage) -> Self {
        PageRecord {
            page_index: p.page_index,
            cutoff: p.cutoff,
            entries: p.entries.into_values().collect(),
        }
    }
}

impl From<PageRecord> for BigradedPage {
    fn from(r: PageRecord) -> Self {
        BigradedPage {
            page_index: r.page_index,
            cutoff: r.cutoff,
            entries: r.entries.into_iter().map(|e| ((e.s, e.t), e)).collect(),
        }
    }
}

impl BigradedPage {
    pub fn new(page_index: u32, cutoff: u64) -> Self {
        BigradedPage {
            page_index,
            cutoff,
            entries: BTreeMap::new(),
        }
    }

    /// Add `dim` to `E^{s,t}`. Entries beyond the cutoff are dropped.
    pub fn add(&mut self, s: u64, t: u64, dim: usize, label: Option<String>) {
        if dim == 0 || s + t > self.cutoff {
            return;
        }
        let e = self.entries.entry((s, t)).or_insert(PageEntry {
            s,
            t,
            dim: 0,
            labels: Vec::new(),
        });
        e.dim += dim;
        e.labels.extend(label);
    }

    pub fn dim(&self, s: u64, t: u64) -> usize {
        self.entries.get(&(s, t)).map_or(0, |e| e.dim)
    }

    pub fn entries(&self) -> impl Iterator<Item = &PageEntry> {
        self.entries.values()
    }

    /// Poincaré series by total degree `s + t`.
    pub fn total_series(&self) -> PowerSeries {
        let n = self.cutoff as usize;
        let mut dims = vec![0; n + 1];
        for e in self.entries.values() {
            dims[(e.s + e.t) as usize] += e.dim;
        }
        PowerSeries::from_dims(&dims)
    }

    /// Series of column `s` by total degree.
    pub fn column_series(&self, s: u64) -> PowerSeries {
        let n = self.cutoff as usize;
        let mut dims = vec![0; n + 1];
        for e in self.entries.values().filter(|e| e.s == s) {
            dims[(e.s + e.t) as usize] += e.dim;
        }
        PowerSeries::from_dims(&dims)
    }

    /// Bidegrees where the two pages disagree.
    pub fn differences(&self, other: &BigradedPage) -> Vec<(u64, u64, usize, usize)> {
        let keys: std::collections::BTreeSet<(u64, u64)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        keys.into_iter()
            .filter_map(|(s, t)| {
                let (a, b) = (self.dim(s, t), other.dim(s, t));
                (a != b).then_some((s, t, a, b))
            })
            .collect()
    }

    /// `s,t,dim,labels` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,t,dim,labels\n");
        for e in self.entries.values() {
            let _ = writeln!(out, "{},{},{},{}", e.s, e.t, e.dim, e.labels.join(" "));
        }
        out
    }

    /// Grid with filtration across and complementary degree down, for `s`
    /// and `t` up to the given bounds.
    pub fn render_grid(&self, max_s: u64, max_t: u64) -> String {
        let width = self
            .entries
            .values()
            .map(|e| e.dim.to_string().len())
            .max()
            .unwrap_or(1)
            .max(max_s.to_string().len());
        let label_width = max_t.to_string().len().max(3);
        let mut out = String::new();
        let _ = write!(out, "{:>label_width$} |", "t\\s");
        for s in 0..=max_s {
            let _ = write!(out, " {s:>width$}");
        }
        out.push('\n');
        for t in 0..=max_t {
            let _ = write!(out, "{t:>label_width$} |");
            for s in 0..=max_s {
                let d = self.dim(s, t);
                if d == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {d:>width$}");
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut p = BigradedPage::new(3, 6);
        p.add(0, 3, 1, Some("a".into()));
        p.add(2, 1, 2, None);
        p.add(4, 4, 1, None);
        let s = serde_json::to_string(&p).unwrap();
        let back: BigradedPage = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.total_series().coefficient_line(), "0 0 0 3 0 0 0");
        assert_eq!(p.dim(4, 4), 0);
    }
}
