use rayon::prelude::*;

use crate::constructors::{build, GroupSpec, Named};
use crate::error::Result;
use crate::group::{ElementSet, GroupTable};
use crate::leinster::LeinsterReport;
use crate::numtheory::is_squarefree;
use crate::squarefree::enumerate_squarefree;

/// Largest squarefree order included in the property corpus.
pub const SQUAREFREE_LIMIT: u64 = 600;

/// A corpus group with its normal subgroups computed once by the engine.
pub struct CorpusGroup {
    pub spec: GroupSpec,
    pub table: GroupTable,
    pub normals: Vec<ElementSet>,
    pub report: LeinsterReport,
}

impl CorpusGroup {
    pub fn new(spec: GroupSpec) -> Result<CorpusGroup> {
        let table = build(&spec)?;
        let normals = table.normal_subgroups();
        let report = LeinsterReport::from_orders(
            spec.label(),
            table.order() as u64,
            normals.iter().map(|n| n.len() as u64).collect(),
        );
        Ok(CorpusGroup {
            spec,
            table,
            normals,
            report,
        })
    }
}

fn named_specs() -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    for m in 1..=50 {
        specs.push(GroupSpec::Dihedral(m));
    }
    for m in 2..=25 {
        specs.push(GroupSpec::Dicyclic(m));
    }
    specs.push(GroupSpec::Named(Named::A4));
    specs.push(GroupSpec::Named(Named::S3));
    specs.push(GroupSpec::Semidirect { a: 7, b: 8, t: 6 });
    specs.push(GroupSpec::Semidirect { a: 5, b: 4, t: 2 });
    specs.push(GroupSpec::Semidirect { a: 9, b: 2, t: 8 });
    for ns in [
        vec![2, 2],
        vec![2, 4],
        vec![2, 2, 2],
        vec![3, 3],
        vec![4, 4],
        vec![2, 6],
        vec![5, 5],
    ] {
        specs.push(GroupSpec::Abelian(ns));
    }
    // S4
    specs.push(GroupSpec::Perm(vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]]));
    for text in [
        "S3xC5", "Dic3xC5", "Dic5xC19", "Dic7xC13", "A4xC5", "Dic2xC3", "S3xC2",
    ] {
        specs.push(text.parse().expect("valid corpus spec"));
    }
    specs
}

/// Every group of squarefree order up to [`SQUAREFREE_LIMIT`] plus the named
/// families (dihedral of order ≤ 100, dicyclic of order ≤ 100, `A4`, `S4`,
/// `C7 ⋊ C8`, a few abelian and product groups). Built in parallel, returned
/// in a fixed order.
pub fn corpus() -> Result<Vec<CorpusGroup>> {
    let mut specs = Vec::new();
    for n in (1..=SQUAREFREE_LIMIT).filter(|&n| is_squarefree(n)) {
        for d in enumerate_squarefree(n)? {
            specs.push(GroupSpec::Squarefree(d));
        }
    }
    specs.extend(named_specs());
    specs.into_par_iter().map(CorpusGroup::new).collect()
}
