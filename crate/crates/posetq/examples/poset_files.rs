//! Round-trips a construction through the on-disk document format: save,
//! reload, and confirm the closed relation, parts, and realizer survive.
//!
//!     cargo run --example poset_files

use posetq::construct::build_r;
use posetq::file::{load, save, PosetFile};

fn main() -> posetq::Result<()> {
    let record = build_r(3)?;
    let path = std::path::Path::new("r3.poset.json");
    save(path, &PosetFile::from_record(&record))?;
    println!("wrote {} ({} bytes)", path.display(), std::fs::metadata(path)?.len());

    let doc = load(path)?;
    assert_eq!(doc.poset, record.poset);
    assert_eq!(doc.parts, record.parts);
    assert_eq!(doc.realizer, record.realizer);
    println!("reloaded: n = {}, parts = {:?}", doc.poset.n(), doc.parts.keys().collect::<Vec<_>>());

    // Files may list any generating set; the loader closes transitively.
    let sparse = PosetFile {
        n: 4,
        relations: vec![(0, 1), (1, 2), (2, 3)],
        labels: None,
        parts: None,
        realizer: None,
    };
    let doc = sparse.into_document()?;
    assert!(doc.poset.lt(0, 3), "closure fills in the implied relations");
    println!("sparse chain document closes to {} relation pairs", doc.poset.relation_count());
    Ok(())
}
