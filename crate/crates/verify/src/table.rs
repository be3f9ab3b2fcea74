//! Claimed values of G, NG, TG and NTG (minimal sizes of generating, normally
//! generating, torsion generating and normally torsion generating sets).

use std::fmt;
use std::str::FromStr;

use braidforge_core::Surface;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamily {
    Braid(Surface),
    Pure(Surface),
    Mcg(Surface),
    PureMcg(Surface),
}

pub const ALL_FAMILIES: [GroupFamily; 12] = [
    GroupFamily::Braid(Surface::Disc),
    GroupFamily::Braid(Surface::Sphere),
    GroupFamily::Braid(Surface::ProjectivePlane),
    GroupFamily::Pure(Surface::Disc),
    GroupFamily::Pure(Surface::Sphere),
    GroupFamily::Pure(Surface::ProjectivePlane),
    GroupFamily::Mcg(Surface::Disc),
    GroupFamily::Mcg(Surface::Sphere),
    GroupFamily::Mcg(Surface::ProjectivePlane),
    GroupFamily::PureMcg(Surface::Disc),
    GroupFamily::PureMcg(Surface::Sphere),
    GroupFamily::PureMcg(Surface::ProjectivePlane),
];

impl GroupFamily {
    pub fn code(self) -> &'static str {
        use GroupFamily::*;
        use Surface::*;
        match self {
            Braid(Disc) => "B",
            Braid(Sphere) => "BS2",
            Braid(ProjectivePlane) => "BP2",
            Pure(Disc) => "P",
            Pure(Sphere) => "PS2",
            Pure(ProjectivePlane) => "PP2",
            Mcg(Disc) => "MCG-D",
            Mcg(Sphere) => "MCG-S2",
            Mcg(ProjectivePlane) => "MCG-P2",
            PureMcg(Disc) => "PMCG-D",
            PureMcg(Sphere) => "PMCG-S2",
            PureMcg(ProjectivePlane) => "PMCG-P2",
        }
    }

    pub fn surface(self) -> Surface {
        match self {
            GroupFamily::Braid(s) | GroupFamily::Pure(s) | GroupFamily::Mcg(s) | GroupFamily::PureMcg(s) => s,
        }
    }

    pub fn is_pure(self) -> bool {
        matches!(self, GroupFamily::Pure(_) | GroupFamily::PureMcg(_))
    }

    pub fn is_mapping_class(self) -> bool {
        matches!(self, GroupFamily::Mcg(_) | GroupFamily::PureMcg(_))
    }

    /// Smallest number of strands for which values are tabulated.
    pub fn min_strands(self) -> usize {
        match self.surface() {
            Surface::Sphere => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for GroupFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<GroupFamily, String> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let codes: Vec<&str> = ALL_FAMILIES.iter().map(|f| f.code()).collect();
                format!("unknown family {s:?}; expected one of {}", codes.join(", "))
            })
    }
}

/// `None` marks a quantity that is not defined (the group is not torsion generated).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub g: Option<u64>,
    pub ng: Option<u64>,
    pub tg: Option<u64>,
    pub ntg: Option<u64>,
}

fn show(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G={} NG={} TG={} NTG={}", show(self.g), show(self.ng), show(self.tg), show(self.ntg))
    }
}

/// The claimed values for `family` on `n` strands, `None` below the family's range.
pub fn claimed(family: GroupFamily, n: usize) -> Option<Invariants> {
    use GroupFamily::*;
    use Surface::*;
    if n < family.min_strands() {
        return None;
    }
    let m = n as u64;
    let all = |v: u64| Invariants { g: Some(v), ng: Some(v), tg: Some(v), ntg: Some(v) };
    let untorsioned = |g: u64, ng: u64| Invariants { g: Some(g), ng: Some(ng), tg: None, ntg: None };
    let parity = if n % 2 == 1 { 1 } else { 2 };
    Some(match family {
        Braid(Disc) => untorsioned(if n == 2 { 1 } else { 2 }, 1),
        Braid(Sphere) | Mcg(Sphere) => Invariants { g: Some(2), ng: Some(1), tg: Some(2), ntg: Some(parity) },
        Braid(ProjectivePlane) | Mcg(ProjectivePlane) => all(2),
        Pure(Disc) => untorsioned(m * (m - 1) / 2, m * (m - 1) / 2),
        Pure(Sphere) => untorsioned((m * (m - 3) + 2) / 2, (m * (m - 3) + 2) / 2),
        Pure(ProjectivePlane) | PureMcg(ProjectivePlane) => all(m),
        Mcg(Disc) if n == 2 => all(1),
        Mcg(Disc) => Invariants { g: Some(2), ng: Some(1), tg: Some(2), ntg: Some(2) },
        PureMcg(Disc) => untorsioned(m * (m - 1) / 2 - 1, m * (m - 1) / 2 - 1),
        PureMcg(Sphere) => untorsioned(m * (m - 3) / 2, m * (m - 3) / 2),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremTable {
    pub family: String,
    pub rows: Vec<(usize, Invariants)>,
}

impl TheoremTable {
    pub fn new(family: GroupFamily, ns: impl IntoIterator<Item = usize>) -> TheoremTable {
        let rows = ns.into_iter().filter_map(|n| claimed(family, n).map(|v| (n, v))).collect();
        TheoremTable { family: family.code().to_string(), rows }
    }
}

impl fmt::Display for TheoremTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4}  {:>4} {:>4} {:>4} {:>4}   ({})", "n", "G", "NG", "TG", "NTG", self.family)?;
        for (n, v) in &self.rows {
            writeln!(f, "{:>4}  {:>4} {:>4} {:>4} {:>4}", n, show(v.g), show(v.ng), show(v.tg), show(v.ntg))?;
        }
        Ok(())
    }
}
