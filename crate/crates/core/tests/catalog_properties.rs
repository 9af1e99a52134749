use std::path::Path;

use gencomp_core::catalog::{
    attach_fixtures, builtin_catalog, calibrate, check_all, crosscheck, load_fixtures, CatalogEntry, EntryStatus,
    BUNDLED_FIXTURES,
};

fn bundled() -> Vec<CatalogEntry> {
    let fixtures = load_fixtures(Path::new(BUNDLED_FIXTURES)).unwrap();
    attach_fixtures(builtin_catalog(), &fixtures)
}

#[test]
fn verified_entries_stay_verified_at_every_depth() {
    let checked = check_all(&bundled(), 10);
    let verified: Vec<&CatalogEntry> = checked.iter().filter(|e| e.status == EntryStatus::Verified).collect();
    assert!(verified.len() >= 20);
    for e in verified {
        let fixture = e.fixture.as_ref().unwrap();
        let offset = e.offset.unwrap();
        let first_n = (fixture.first_index().unwrap() - offset).max(1);
        let max_depth = (fixture.last_index().unwrap() - offset - first_n + 1) as usize;
        for depth in 10..=max_depth {
            let again = crosscheck(e, depth).unwrap();
            assert_eq!(again.status, EntryStatus::Verified, "{} {} at depth {depth}", e.oeis_id, e.spec);
        }
    }
}

#[test]
fn persisted_offsets_match_fresh_calibration() {
    for e in bundled() {
        let (Some(stored), Some(fixture)) = (e.offset, &e.fixture) else {
            continue;
        };
        assert_eq!(calibrate(&e.spec, fixture).unwrap(), Some(stored), "{} {}", e.oeis_id, e.spec);
    }
}

#[test]
fn calibration_is_deterministic() {
    let a = check_all(&bundled(), 10);
    let b = check_all(&bundled(), 10);
    assert_eq!(a, b);
}

#[test]
fn every_persisted_offset_belongs_to_a_fixtured_entry() {
    for e in bundled() {
        if e.offset.is_some() {
            assert!(e.fixture.is_some(), "{} has an offset but no fixture", e.oeis_id);
        }
    }
}
