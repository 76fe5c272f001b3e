//! JSON documents for elements, sets and reports.
//!
//! Every top-level document carries `"schema": "alcove-lab/1"`. Elements are
//! `{"ctx":"D:3","t":[1,0,0],"s":[2,-1,3]}`.

use serde::{Deserialize, Serialize};

use crate::adm_perm::{Comparison, GapReport, InheritanceReport, LiftStep};
use crate::bruhat;
use crate::error::{Error, Result};
use crate::iwahori_weyl::{AffineRoot, IWElement};
use crate::root_data::GroupCtx;
use crate::signed_weyl::SignedPerm;

pub const SCHEMA: &str = "alcove-lab/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub ctx: String,
    pub t: Vec<i64>,
    pub s: Vec<i32>,
}

impl ElementJson {
    pub fn new(ctx: &GroupCtx, w: &IWElement) -> Self {
        ElementJson {
            ctx: ctx.to_string(),
            t: w.translation().to_vec(),
            s: w.linear().window().to_vec(),
        }
    }

    /// Validates the context, the shapes and Weyl group membership.
    pub fn resolve(&self) -> Result<(GroupCtx, IWElement)> {
        let ctx: GroupCtx = self.ctx.parse()?;
        let w = IWElement::new(self.t.clone(), SignedPerm::from_window(self.s.clone())?)?;
        ctx.check_element(&w)?;
        Ok((ctx, w))
    }
}

pub fn element_to_string(ctx: &GroupCtx, w: &IWElement) -> String {
    serde_json::to_string(&ElementJson::new(ctx, w)).expect("element serializes")
}

pub fn parse_element(s: &str) -> Result<(GroupCtx, IWElement)> {
    let e: ElementJson = serde_json::from_str(s).map_err(|e| Error::Parse(format!("element JSON: {e}")))?;
    e.resolve()
}

#[derive(Clone, Debug, Serialize)]
pub struct RootJson {
    pub i: usize,
    pub j: usize,
    pub d: i64,
}

impl From<&AffineRoot> for RootJson {
    fn from(r: &AffineRoot) -> Self {
        let (i, j) = r.indices();
        RootJson { i, j, d: r.d() }
    }
}

fn elements(ctx: &GroupCtx, ws: &[IWElement]) -> Vec<ElementJson> {
    ws.iter().map(|w| ElementJson::new(ctx, w)).collect()
}

#[derive(Serialize)]
pub struct SetDoc {
    pub schema: &'static str,
    pub ctx: String,
    pub mu: Vec<i64>,
    pub set: &'static str,
    pub count: usize,
    pub elements: Vec<ElementJson>,
}

impl SetDoc {
    /// `ws` is expected in canonical order.
    pub fn new(ctx: &GroupCtx, mu: &[i64], set: &'static str, ws: &[IWElement]) -> Self {
        SetDoc {
            schema: SCHEMA,
            ctx: ctx.to_string(),
            mu: mu.to_vec(),
            set,
            count: ws.len(),
            elements: elements(ctx, ws),
        }
    }
}

#[derive(Serialize)]
pub struct CompareDoc {
    pub schema: &'static str,
    pub ctx: String,
    pub mu: Vec<i64>,
    pub adm_count: usize,
    pub perm_count: usize,
    pub adm: Vec<ElementJson>,
    pub perm: Vec<ElementJson>,
    pub equal: bool,
    pub adm_subset_perm: bool,
    pub witnesses: Vec<ElementJson>,
}

impl CompareDoc {
    pub fn new(ctx: &GroupCtx, mu: &[i64], cmp: &Comparison) -> Self {
        let adm = bruhat::canonical_sort(ctx, cmp.adm.iter().cloned());
        let perm = bruhat::canonical_sort(ctx, cmp.perm.iter().cloned());
        CompareDoc {
            schema: SCHEMA,
            ctx: ctx.to_string(),
            mu: mu.to_vec(),
            adm_count: adm.len(),
            perm_count: perm.len(),
            adm: elements(ctx, &adm),
            perm: elements(ctx, &perm),
            equal: cmp.equal(),
            adm_subset_perm: cmp.adm_subset(),
            witnesses: elements(ctx, &cmp.witnesses),
        }
    }
}

#[derive(Serialize)]
pub struct LiftStepJson {
    pub root: RootJson,
    pub length_before: usize,
    pub length_after: usize,
    pub before: ElementJson,
    pub after: ElementJson,
}

#[derive(Serialize)]
pub struct LiftDoc {
    pub schema: &'static str,
    pub ctx: String,
    pub element: ElementJson,
    pub steps: Vec<LiftStepJson>,
}

impl LiftDoc {
    pub fn new(ctx: &GroupCtx, w: &IWElement, steps: &[LiftStep]) -> Result<Self> {
        let steps = steps
            .iter()
            .map(|s| {
                Ok(LiftStepJson {
                    root: RootJson::from(&s.root),
                    length_before: bruhat::length(ctx, &s.before)?,
                    length_after: bruhat::length(ctx, &s.after)?,
                    before: ElementJson::new(ctx, &s.before),
                    after: ElementJson::new(ctx, &s.after),
                })
            })
            .collect::<Result<_>>()?;
        Ok(LiftDoc {
            schema: SCHEMA,
            ctx: ctx.to_string(),
            element: ElementJson::new(ctx, w),
            steps,
        })
    }
}

#[derive(Serialize)]
pub struct InheritanceDoc {
    pub schema: &'static str,
    pub n: usize,
    pub maxlen: usize,
    pub elements: usize,
    pub pairs: usize,
    pub violations: Vec<[ElementJson; 2]>,
}

impl InheritanceDoc {
    pub fn new(n: usize, maxlen: usize, r: &InheritanceReport) -> Result<Self> {
        let b = GroupCtx::new(crate::root_data::Family::B, n)?;
        Ok(InheritanceDoc {
            schema: SCHEMA,
            n,
            maxlen,
            elements: r.elements,
            pairs: r.pairs,
            violations: r
                .violations
                .iter()
                .map(|(x, y)| [ElementJson::new(&b, x), ElementJson::new(&b, y)])
                .collect(),
        })
    }
}

#[derive(Serialize)]
pub struct GapEntryJson {
    pub mu: Vec<i64>,
    pub adm_count: usize,
    pub perm_count: usize,
    pub witnesses: Vec<ElementJson>,
}

#[derive(Serialize)]
pub struct GapDoc {
    pub schema: &'static str,
    pub ctx: String,
    pub scanned: Vec<Vec<i64>>,
    pub gaps: Vec<GapEntryJson>,
}

impl GapDoc {
    pub fn new(ctx: &GroupCtx, scanned: &[Vec<i64>], reports: &[GapReport]) -> Self {
        GapDoc {
            schema: SCHEMA,
            ctx: ctx.to_string(),
            scanned: scanned.to_vec(),
            gaps: reports
                .iter()
                .map(|r| GapEntryJson {
                    mu: r.mu.clone(),
                    adm_count: r.adm_size,
                    perm_count: r.perm_size,
                    witnesses: elements(ctx, &r.witnesses),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let s = r#"{"ctx":"D:3","t":[1,0,0],"s":[2,-1,-3]}"#;
        let (ctx, w) = parse_element(s).unwrap();
        assert_eq!(element_to_string(&ctx, &w), s);
    }

    #[test]
    fn rejects_bad_elements() {
        for s in [
            r#"{"ctx":"D:3","t":[1,0],"s":[1,2,3]}"#,
            r#"{"ctx":"D:3","t":[1,0,0],"s":[1,1,3]}"#,
            r#"{"ctx":"A:3","t":[1,0,0],"s":[-1,2,3]}"#,
            r#"{"ctx":"E:3","t":[1,0,0],"s":[1,2,3]}"#,
            r#"{"ctx":"D:3","t":[1,0,0]}"#,
            r#"{"ctx":"D:3","t":[1,0,0],"s":[1,2,3],"x":1}"#,
            "not json",
        ] {
            assert!(parse_element(s).is_err(), "{s}");
        }
    }

    #[test]
    fn root_encoding() {
        let r = AffineRoot::long(3, 5, 6, 1).unwrap();
        let j = serde_json::to_string(&RootJson::from(&r)).unwrap();
        assert_eq!(j, r#"{"i":1,"j":2,"d":1}"#);
    }
}
