use empty4::families::tables::{NONPRIMITIVE, PRIMITIVE_MAX_FACETS, PRIMITIVE};
use empty4::families::{family_membership, FamilyMatcher};
use empty4::{
    admissible, coprime_condition, facet_volumes, family_generate, is_empty, is_hollow, FamilyId,
    Sign,
};

fn signs(id: FamilyId) -> Vec<Sign> {
    if id.has_sign() {
        vec![Sign::Plus, Sign::Minus]
    } else {
        vec![Sign::Plus]
    }
}

#[test]
fn tabulated_members_are_empty_iff_admissible() {
    for id in FamilyId::all_tabulated() {
        for v in 1..=200u32 {
            if v % id.index() != 0 {
                continue;
            }
            for sign in signs(id) {
                let adm = admissible(id, v, sign).unwrap();
                match family_generate(id, v, &[], sign) {
                    Ok(t) => {
                        assert_eq!(is_empty(&t), adm, "{id} {sign:?} V={v}: {t}");
                        // Admissibility is the coprime condition on the member.
                        assert_eq!(coprime_condition(&t), adm, "{id} {sign:?} V={v}");
                        assert!(is_hollow(&t), "{id} {sign:?} V={v} not hollow");
                    }
                    // Entries sharing a factor with V cannot be admissible.
                    Err(_) => assert!(!adm, "{id} V={v} admissible but invalid"),
                }
            }
        }
    }
}

#[test]
fn parametric_members_are_hollow_and_empty_iff_admissible() {
    for v in 1..=60u32 {
        for a in 0..v as i64 {
            for b in 0..v as i64 {
                if let Ok(t) = family_generate(FamilyId::Width1, v, &[a, b], Sign::Plus) {
                    assert!(is_empty(&t), "k1 V={v} a={a} b={b}");
                }
            }
            for id in [FamilyId::K2Primitive, FamilyId::K2Nonprimitive] {
                if let Ok(t) = family_generate(id, v, &[a], Sign::Plus) {
                    assert!(is_hollow(&t));
                    assert_eq!(is_empty(&t), admissible(id, v, Sign::Plus).unwrap(), "{id} V={v} a={a}");
                }
            }
        }
    }
}

#[test]
fn never_rows_stay_non_empty_to_500() {
    let never: Vec<FamilyId> = FamilyId::all_tabulated().filter(|id| id.never_admissible()).collect();
    assert_eq!(never.len(), 6);
    for id in never {
        for v in (id.index()..=500).step_by(id.index() as usize) {
            for sign in [Sign::Plus, Sign::Minus] {
                if let Ok(t) = family_generate(id, v, &[], sign) {
                    assert!(!is_empty(&t), "{id} V={v}");
                }
            }
        }
    }
}

#[test]
fn facet_volumes_divide_tabulated_maxima() {
    for (n, row) in NONPRIMITIVE.iter().enumerate() {
        let Some(max) = row.max_facets else { continue };
        let id = FamilyId::Nonprimitive(n as u8 + 1);
        for v in (row.index..=200).step_by(row.index as usize) {
            for sign in signs(id) {
                if !admissible(id, v, sign).unwrap() {
                    continue;
                }
                let t = family_generate(id, v, &[], sign).unwrap();
                let fv = facet_volumes(&t);
                for i in 0..5 {
                    assert_eq!(max[i] % fv.0[i], 0, "{id} V={v} facets {fv}");
                }
            }
        }
    }
    for (n, b) in PRIMITIVE.iter().enumerate() {
        let id = FamilyId::Primitive(n as u8 + 1);
        let max = PRIMITIVE_MAX_FACETS
            .iter()
            .find(|(row, _)| row == b)
            .map_or([1; 5], |&(_, m)| m);
        for v in 1..=200u32 {
            if !admissible(id, v, Sign::Plus).unwrap() {
                continue;
            }
            let fv = facet_volumes(&family_generate(id, v, &[], Sign::Plus).unwrap());
            for i in 0..5 {
                assert_eq!(max[i] % fv.0[i], 0, "{id} V={v} facets {fv}");
            }
        }
    }
}

#[test]
fn generated_members_carry_their_label() {
    for v in 1..=120u32 {
        let matcher = FamilyMatcher::new(v);
        for id in FamilyId::all_tabulated() {
            if v % id.index() != 0 {
                continue;
            }
            for sign in signs(id) {
                let Ok(t) = family_generate(id, v, &[], sign) else { continue };
                let labels = empty4::families::membership_with(&t, &matcher);
                assert!(labels.iter().any(|l| l.id == id), "{id} V={v}");
                for l in &labels {
                    assert!(l.generate(v).unwrap().is_isomorphic(&t).unwrap());
                }
            }
        }
    }
    assert_eq!(family_membership(&empty4::Tuple::new(65, &[3, 14, 23, 26, 64]).unwrap()), vec![]);
}

#[test]
fn planar_hollow_families_are_hollow_and_their_empty_members_are_classified() {
    use empty4::families::{hollow_k2_generate, HOLLOW_K2_FAMILIES};
    for n in 1..=HOLLOW_K2_FAMILIES {
        for v in 2..=36u32 {
            for a in 0..v as i64 {
                for b in 0..v as i64 {
                    let Ok(t) = hollow_k2_generate(n, v, a, b) else { continue };
                    assert!(is_hollow(&t), "family {n} V={v} ({a},{b}): {t}");
                    if is_empty(&t) {
                        let labels = family_membership(&t);
                        assert!(labels.iter().any(|l| l.id.k() <= 2), "family {n}: {t}");
                    }
                }
            }
        }
    }
    assert!(hollow_k2_generate(2, 9, 1, 1).is_err());
    assert!(hollow_k2_generate(7, 8, 1, 1).is_err());
}
