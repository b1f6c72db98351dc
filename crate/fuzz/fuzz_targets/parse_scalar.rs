#![no_main]
use libfuzzer_sys::fuzz_target;
use thetalie::exactnum::CycloField;

const ORDERS: [u32; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let field = CycloField::get(ORDERS[pick as usize % ORDERS.len()]);
    if let Ok(x) = field.parse(text) {
        // the rendering reads back to the same value
        assert_eq!(field.parse(&x.to_string()).unwrap(), x);
    }
});
