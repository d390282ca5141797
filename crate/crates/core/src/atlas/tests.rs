use super::*;
use crate::fieldkit::Field;
use alloc::vec;

fn g() -> Guards {
    Guards::default()
}

fn verdict_of(id: &str, pairs: &[(&str, i64)]) -> Verdict {
    let built = build(id, &Params::from_pairs(pairs.iter().copied()), &g()).unwrap();
    check(&built, &g()).unwrap()
}

fn brace(v: &Verdict) -> String {
    v.computed_ia.as_ref().map(|x| x.to_brace_string()).unwrap_or_default()
}

#[test]
fn golay_array() {
    let v = verdict_of("S.1", &[]);
    assert!(v.pass, "{:?}", v.mismatches);
    assert_eq!(brace(&v), "{23,22,21;1,2,3}");
    assert_eq!(v.graph_agrees, Some(true));
}

#[test]
fn lifted_hamming_array() {
    let v = verdict_of("F.24", &[("q", 2), ("m", 3), ("r", 2)]);
    assert!(v.pass, "{:?}", v.mismatches);
    assert_eq!(brace(&v), "{21,12;1,6}");
}

#[test]
fn concatenation_array() {
    let built = build("F.34", &Params::from_pairs([("q", 2), ("k", 3), ("c", 2)]), &g()).unwrap();
    assert_eq!(built.code.n(), 35);
    assert_eq!(built.code.dimension(), Some(29));
    let v = check(&built, &g()).unwrap();
    assert!(v.pass, "{:?}", v.mismatches);
    assert_eq!(brace(&v), "{35,16;1,20}");
}

#[test]
fn expected_arrays_without_building() {
    let (ia, src) = expected_ia("F.20", &Params::from_pairs([("m", 2)])).unwrap().unwrap();
    assert_eq!(ia.to_brace_string(), "{31,30,17;1,2,15}");
    assert_eq!(src, Source::Printed);
    let (ia, _) = expected_ia("S.22", &Params::new()).unwrap().unwrap();
    assert_eq!(ia.to_brace_string(), "{15,12,1;1,4,15}");
    assert!(expected_ia("N.2", &Params::new()).unwrap().is_none());
}

#[test]
fn aliases_resolve() {
    assert_eq!(resolve("F.52").unwrap().id, "F.22");
    assert_eq!(resolve("S.15").unwrap().id, "S.25");
    assert!(matches!(resolve("F.14"), Err(Error::Catalog(_))));
    assert!(matches!(resolve("X.1"), Err(Error::Catalog(_))));
}

#[test]
fn params_round_trip() {
    let p = Params::parse("q=2, m=3").unwrap();
    assert_eq!(p.to_string(), "m=3,q=2");
    assert!(Params::parse("q").is_err());
    let e = resolve("F.1").unwrap();
    assert!(complete_params(e, &Params::parse("z=1").unwrap()).is_err());
    let full = complete_params(e, &Params::parse("m=4").unwrap()).unwrap();
    assert_eq!(full.get("q").unwrap(), 2);
}

#[test]
fn list_by_radius_and_alphabet() {
    let ids: Vec<&str> =
        list(&Filter { q: Some(2), rho: Some(3), ..Filter::default() }).into_iter().map(|(e, _)| e.id).collect();
    for id in ["F.7", "F.16", "F.20", "S.1", "S.22"] {
        assert!(ids.contains(&id), "{id} missing from {ids:?}");
    }
    assert!(!ids.contains(&"S.10"));
}

#[test]
fn halves_of_hamming() {
    let sc = recipes::half_hamming(4, 0, 2).unwrap();
    assert!(sc.same_set(&recipes::even_half(4).unwrap(), &g()).unwrap());
    let whole = recipes::half_hamming(4, 1, 3).unwrap();
    assert!(whole.same_set(&recipes::hamming(2, 4).unwrap(), &g()).unwrap());
}

#[test]
fn nested_codes_sit_inside_hamming() {
    let base = recipes::nested(4, 0).unwrap();
    assert_eq!((base.dimension(), base.minimum_distance(&g()).unwrap()), (Some(11), 3));
    for i in 1..=2 {
        let c = recipes::nested(4, i).unwrap();
        assert_eq!(c.dimension(), Some(11 - i));
        for w in c.codewords(&g()).unwrap() {
            assert!(base.contains(&w));
        }
    }
}

#[test]
fn extended_bch_matches_entry() {
    let a = build("F.20", &Params::from_pairs([("m", 2)]), &g()).unwrap();
    let b = build("F.21", &Params::from_pairs([("m", 2)]), &g()).unwrap();
    assert!(a.code.extend().unwrap().same_set(&b.code, &g()).unwrap());
}

#[test]
fn self_dual_entries() {
    for (id, pairs) in [("F.51", vec![("q", 4)]), ("F.49", vec![("r", 2)])] {
        let c = build(id, &Params::from_pairs(pairs), &g()).unwrap().code;
        assert!(c.dual().unwrap().same_set(&c, &g()).unwrap(), "{id}");
    }
}

#[test]
fn hadamard_code() {
    let c = recipes::paley_hadamard().unwrap();
    assert_eq!(c.n(), 11);
    assert_eq!(c.size_u128(), Some(24));
    assert_eq!(c.minimum_distance(&g()).unwrap(), 5);
    assert!(!c.is_linear());
}

#[test]
fn block_matrices() {
    // D(2,3): every difference of two distinct rows hits each residue twice.
    for a in 0..6 {
        for b in 0..a {
            let mut hits = [0; 3];
            for j in 0..6 {
                hits[(recipes::D23[a][j] + 3 - recipes::D23[b][j]) % 3] += 1;
            }
            assert_eq!(hits, [2, 2, 2]);
        }
    }
    let k = recipes::k_matrix_code().unwrap();
    assert_eq!((k.n(), k.dimension()), (15, Some(9)));
    let d = recipes::difference_matrix_code(true).unwrap();
    assert_eq!(k.weight_distribution(&g()).unwrap(), d.weight_distribution(&g()).unwrap());
}

#[test]
fn guards_and_unknown_ids() {
    let p = Params::from_pairs([("m", 5)]);
    assert!(matches!(build("F.20", &p, &g()), Err(Error::Resource { .. })));
    assert!(matches!(build("F.99", &Params::new(), &g()), Err(Error::Catalog(_))));
    assert!(matches!(build("F.18", &Params::new(), &g()), Err(Error::Catalog(_))));
    assert!(matches!(build("F.5", &Params::from_pairs([("q", 5)]), &g()), Err(Error::Catalog(_))));
}

#[test]
fn corrected_arrays() {
    for q in [4i64, 8] {
        let v = verdict_of("F.13", &[("q", q)]);
        assert!(v.pass, "{:?}", v.mismatches);
        assert_eq!(v.expected.source, Source::Computed);
    }
    let v = verdict_of("S.17", &[]);
    assert!(v.pass, "{:?}", v.mismatches);
    assert_eq!(brace(&v), "{15,12,1;1,4,15}");
    let v = verdict_of("S.18", &[]);
    assert!(v.pass, "{:?}", v.mismatches);
    assert!(!v.completely_regular);
    assert_eq!(v.rho, 3);
}

#[test]
fn controls_are_not_regular() {
    for (id, pairs) in [
        ("N.1", vec![("q", 2), ("u", 1), ("m", 2), ("nb", 4)]),
        ("N.3", vec![("q", 2), ("m", 2), ("r", 2)]),
        ("N.5", vec![("k", 3), ("c", 1)]),
    ] {
        let v = verdict_of(id, &pairs);
        assert!(v.pass, "{id}: {:?}", v.mismatches);
        assert!(!v.completely_regular);
    }
}

/// The Nordstrom-Robinson code, cut out of the extended Golay code along
/// an octad.
fn nordstrom_robinson() -> Code {
    let eg = recipes::golay().unwrap().extend().unwrap();
    let words = eg.codewords(&g()).unwrap();
    let octad = words.iter().find(|w| w.iter().filter(|&&x| x != 0).count() == 8).unwrap();
    let t: Vec<usize> = (0..24).filter(|&i| octad[i] != 0).collect();
    let rest: Vec<usize> = (0..24).filter(|&i| octad[i] == 0).collect();
    let kept = words
        .iter()
        .filter(|w| {
            let on: Vec<usize> = t.iter().copied().filter(|&i| w[i] != 0).collect();
            on.is_empty() || (on.len() == 2 && on[0] == t[0])
        })
        .map(|w| rest.iter().map(|&i| w[i]).collect::<Vec<_>>())
        .collect();
    Code::from_codewords(&Field::gf(2).unwrap(), 16, kept).unwrap()
}

#[test]
fn preparata_external_check() {
    let nr = nordstrom_robinson();
    assert_eq!(nr.size_u128(), Some(256));
    let v = check_external("F.19", &Params::new(), &nr, &g()).unwrap();
    assert!(v.pass, "{:?}", v.mismatches);
    let p = nr.puncture(15).unwrap();
    let v = check_external("F.18", &Params::new(), &p, &g()).unwrap();
    assert!(v.pass, "{:?}", v.mismatches);
    assert_eq!(brace(&v), "{15,14,1;1,2,15}");
    let v = check_external("F.18", &Params::new(), &recipes::hamming(2, 4).unwrap(), &g()).unwrap();
    assert!(!v.pass);
}
