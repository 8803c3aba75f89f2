use ccnet::encoding::{codeword_length, decode_value, encode_value};
use ccnet::Scheme;

fn golden(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .map(|l| {
            let (n, code) = l.split_once('\t').expect("tab-separated");
            (n.parse().unwrap(), code.to_string())
        })
        .collect()
}

fn check(text: &str, range: usize) {
    let rows = golden(text);
    assert_eq!(rows.len(), range);
    for (v, code) in rows {
        let cw = encode_value(v, range, Scheme::Quaternion).unwrap();
        assert_eq!(cw.to_string(), code, "value {v}");
        assert_eq!(
            decode_value(&code.parse().unwrap(), range, Scheme::Quaternion).unwrap(),
            v
        );
    }
}

#[test]
fn single_symbol_codes() {
    check(include_str!("data/quaternion_codes_l1.txt"), 16);
}

#[test]
fn two_symbol_codes() {
    check(include_str!("data/quaternion_codes_l2.txt"), 31);
}

#[test]
fn three_symbol_code_set() {
    assert_eq!(codeword_length(46, Scheme::Quaternion).unwrap(), 3);
    assert_eq!(codeword_length(47, Scheme::Quaternion).unwrap(), 4);
    let codes: std::collections::BTreeSet<String> = (1..=46)
        .map(|v| encode_value(v, 46, Scheme::Quaternion).unwrap().to_string())
        .collect();
    assert_eq!(codes.len(), 46);
    // C = 36 takes the first 36 of those 46
    for v in 1..=36 {
        assert_eq!(
            encode_value(v, 36, Scheme::Quaternion),
            encode_value(v, 46, Scheme::Quaternion)
        );
    }
}

#[test]
fn quaternary_codes_for_sixteen() {
    let expected = [
        "0,0,0,0,0",
        "0,0,0,0,1",
        "0,0,0,1,1",
        "0,0,1,1,1",
        "0,1,1,1,1",
        "1,1,1,1,1",
        "1,1,1,1,i",
        "1,1,1,i,i",
        "1,1,i,i,i",
        "1,i,i,i,i",
        "i,i,i,i,i",
        "i,i,i,i,1+i",
        "i,i,i,1+i,1+i",
        "i,i,1+i,1+i,1+i",
        "i,1+i,1+i,1+i,1+i",
        "1+i,1+i,1+i,1+i,1+i",
    ];
    for (v, code) in (1..).zip(expected) {
        assert_eq!(
            encode_value(v, 16, Scheme::Quaternary).unwrap().to_string(),
            code
        );
    }
}
