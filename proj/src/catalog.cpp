#include "logcert/catalog.hpp"

namespace logcert::catalog {

namespace {

Polynomial lin(long c0, long c1) { return Polynomial::from_ints({c0, c1}); }
Polynomial quad(long c0, long c1, long c2) { return Polynomial::from_ints({c0, c1, c2}); }

Polynomial square(const Polynomial& p) { return p * p; }
Polynomial cube(const Polynomial& p) { return p * p * p; }

}  // namespace

const ThreeTermCoefficients& three_term_coefficients() {
  static const ThreeTermCoefficients k = [] {
    ThreeTermCoefficients t;
    t.a = square(lin(1, 1)) * lin(-1, 4) * lin(3, 4);
    t.b = -(lin(-1, 4) * lin(7, 4) * quad(3, 10, 10));
    t.c = Polynomial::from_ints({9}) * quad(0, 0, 1) * lin(3, 4) * lin(7, 4);
    return t;
  }();
  return k;
}

const Polynomial& three_term_discriminant() {
  static const Polynomial k = [] {
    const auto& t = three_term_coefficients();
    return t.b * t.b - Polynomial::from_ints({4}) * t.a * t.c;
  }();
  return k;
}

const RecurrenceRelation& four_term_recurrence() {
  static const RecurrenceRelation k = [] {
    RecurrenceRelation r;
    r.name = "four-term(S)";
    r.n_min = 0;
    r.coeffs = {
        Polynomial::from_ints({9}) * square(lin(1, 1)),
        -quad(87, 74, 19),
        lin(3, 1) * lin(29, 11),
        -square(lin(3, 1)),
    };
    return r;
  }();
  return k;
}

const RecurrenceRelation& three_term_recurrence() {
  static const RecurrenceRelation k = [] {
    // a(m) z_{m+1} + b(m) z_m + c(m) z_{m-1} = 0 for m >= 1, rewritten at
    // m = n+1 as indices n..n+2.
    const auto& t = three_term_coefficients();
    RecurrenceRelation r;
    r.name = "three-term(S)";
    r.n_min = 0;
    r.coeffs = {t.c.shifted(1), t.b.shifted(1), t.a.shifted(1)};
    return r;
  }();
  return k;
}

const RecurrenceRelation& scaled_order3_recurrence() {
  static const RecurrenceRelation k = [] {
    RecurrenceRelation r;
    r.name = "order-3(u)";
    r.n_min = 1;
    r.coeffs = {
        Polynomial::from_ints({-9}) * cube(lin(1, 1)) * lin(2, 1),
        lin(0, 1) * lin(2, 1) * quad(87, 74, 19),
        -(lin(0, 1) * lin(1, 1) * lin(3, 1) * lin(29, 11)),
        lin(0, 1) * lin(1, 1) * lin(2, 1) * lin(3, 1),
    };
    return r;
  }();
  return k;
}

const RecurrenceRelation& companion_order3_recurrence() {
  static const RecurrenceRelation k = [] {
    RecurrenceRelation r;
    r.name = "companion-order-3(u)";
    r.n_min = 1;
    r.coeffs = {
        Polynomial::from_ints({-9}) * square(lin(1, 1)) *
            Polynomial::from_ints({5695, 9130, 5376, 1376, 128}),
        Polynomial::from_ints({106920, 384657, 550013, 399646, 155712, 30880, 2432}),
        -Polynomial::from_ints({59535, 215886, 309049, 225582, 88512, 17696, 1408}),
        lin(2, 1) * lin(3, 1) * Polynomial::from_ints({693, 1994, 2016, 864, 128}),
    };
    return r;
  }();
  return k;
}

const RecurrenceRelation& scaled_order2_recurrence() {
  static const RecurrenceRelation k = [] {
    RecurrenceRelation r;
    r.name = "order-2(u)";
    r.n_min = 1;
    r.coeffs = {
        Polynomial::from_ints({9}) * cube(lin(1, 1)) * lin(11, 4) * lin(7, 4),
        -(lin(0, 1) * lin(3, 4) * lin(11, 4) * quad(23, 30, 10)),
        lin(0, 1) * lin(1, 1) * lin(2, 1) * lin(3, 4) * lin(7, 4),
    };
    return r;
  }();
  return k;
}

const RationalFunction& squeeze_bound() {
  static const RationalFunction k{Polynomial::from_ints({-9, 0, 18}),
                                  Polynomial::from_ints({0, 0, 2})};
  return k;
}

const RationalFunction& root_midpoint() {
  static const RationalFunction k = [] {
    const auto& t = three_term_coefficients();
    return RationalFunction(-t.b, t.a.scaled(Rational(2)));
  }();
  return k;
}

const RationalFunction& ratio_u() {
  static const RationalFunction k = [] {
    const auto& t = three_term_coefficients();
    // -b(n-1)/a(n-1): solve the three-term relation for z_n.
    return RationalFunction(-t.b.shifted(-1), t.a.shifted(-1));
  }();
  return k;
}

const RationalFunction& ratio_v() {
  static const RationalFunction k = [] {
    const auto& t = three_term_coefficients();
    return RationalFunction(-t.c.shifted(-1), t.a.shifted(-1));
  }();
  return k;
}

}  // namespace logcert::catalog
