use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclic_pir::cyclic::{code_from_cosets, coset_representatives, CyclicCodeSpec};
use cyclic_pir::distance::{min_distance, Bound, DistanceOptions};
use cyclic_pir::protocol::{
    encode_storage, privacy_check, run_full_retrieval, Database, HonestServers, PrivacyMode, ProtocolSetup,
};

const LENGTHS: [(u32, u32); 6] = [(7, 2), (9, 2), (15, 2), (17, 2), (8, 3), (13, 3)];

fn code(len: usize, mask: u64) -> CyclicCodeSpec {
    let (n, q) = LENGTHS[len];
    let reps: Vec<u32> =
        coset_representatives(n, q).unwrap().into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, r)| r).collect();
    code_from_cosets(&reps, n, q).unwrap()
}

fn distance(c: &CyclicCodeSpec) -> Option<usize> {
    min_distance(c, &DistanceOptions::default()).unwrap().value().and_then(Bound::finite)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution(len in 0..LENGTHS.len(), mask: u64) {
        let c = code(len, mask);
        prop_assert_eq!(c.dual().dual(), c.clone());
        prop_assert_eq!(c.dim() + c.dual().dim(), c.n() as usize);
        let g = c.linear_code().unwrap();
        prop_assert!(g.dual().same_code(&c.dual().linear_code().unwrap()));
    }

    #[test]
    fn star_matches_componentwise_products(len in 0..LENGTHS.len(), a: u64, b: u64) {
        let (c, d) = (code(len, a), code(len, b));
        let s = c.star(&d).unwrap();
        prop_assert_eq!(&s, &d.star(&c).unwrap());
        let direct = c.linear_code().unwrap().star(&d.linear_code().unwrap()).unwrap();
        prop_assert!(direct.same_code(&s.linear_code().unwrap()));
    }

    #[test]
    fn bch_bound_is_a_lower_bound(len in 0..LENGTHS.len(), mask: u64) {
        let c = code(len, mask);
        if let Some(d) = distance(&c) {
            prop_assert!(c.bch_bound() <= d, "{}: BCH {} > d {}", c, c.bch_bound(), d);
        }
    }

    #[test]
    fn privacy_check_agrees_with_dual_distance(len in 0..3usize, mask: u64) {
        let d = code(len, mask);
        prop_assume!(d.dim() > 0 && d.dim() < d.n() as usize);
        let dd = distance(&d.dual()).unwrap();
        let gd = d.linear_code().unwrap();
        prop_assert!(privacy_check(&gd, dd - 1, PrivacyMode::Exhaustive, 0).unwrap().passed);
        let fail = privacy_check(&gd, dd, PrivacyMode::Exhaustive, 0).unwrap();
        prop_assert!(!fail.passed);
        prop_assert!(gd.generator().select_columns(&fail.witness.unwrap()).rank() < dd);
    }

    #[test]
    fn retrieval_recovers_the_file(len in 0..LENGTHS.len(), a: u64, b: u64, seed: u64, files in 1..4usize, rows in 1..3usize) {
        let (c, d) = (code(len, a), code(len, b));
        prop_assume!(c.dim() > 0);
        let Ok(setup) = ProtocolSetup::new(&c, &d) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let db = Database::random(c.q(), files, rows, c.dim(), &mut rng).unwrap();
        let storage = encode_storage(&db, &setup.gc).unwrap();
        let servers = HonestServers::new(&storage);
        let file = (seed as usize) % files;
        let report = run_full_retrieval(&setup, &db, &storage, &servers, file, seed).unwrap();
        prop_assert_eq!(report.file, db.file(file));
        prop_assert_eq!(report.decomposition_failures, 0);
        prop_assert_eq!(report.nominal_rate, setup.nominal_rate());
    }
}
