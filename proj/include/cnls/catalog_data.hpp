#pragma once

namespace cnls {

// Built-in catalog of representative subalgebras, in the external text
// format: one record per blank-line-separated block, fields
//   id: / gen: / constraint: / claim: / note:
// Generator lines use the slot-tagged element syntax; free function slots
// appear as uninterpreted atoms like phi(t); constraints are expressions that
// must vanish identically once a sample is substituted.
inline const char* builtin_catalog_text() {
    return R"(# one-dimensional representatives

id: L_{1,1}
gen: Z: 1
claim: dim1

id: L_{1,2}
gen: X: 1
claim: dim1

id: L_{1,3}
gen: X: phi(t); Y: 1
claim: dim1

id: L_{1,4}
gen: W: psi(t)
claim: dim1
note: psi nonzero

# two-dimensional representatives, Abelian

id: L_{2,1}
gen: Z: 1
gen: X: 1; Y: alpha
claim: abelian

id: L_{2,2}
gen: Z: 1
gen: Y: 1
claim: abelian

id: L_{2,3}
gen: Z: 1
gen: W: 1
claim: abelian

id: L_{2,4}
gen: X: 1
gen: Y: psi(t)
claim: abelian
note: psi nonzero

id: L_{2,5}
gen: X: 1
gen: W: omega(t)
claim: abelian
note: omega nonzero

id: L_{2,6}
gen: Y: 1; X: phi(t)
gen: X: psi(t); Y: Phi(t)
constraint: Phi'(t) - eps*(phi(t)*psi'(t) - phi'(t)*psi(t))
claim: abelian
note: independence needs Phi nonconstant or phi, psi independent

id: L_{2,7}
gen: W: phi(t)
gen: X: psi(t); Y: 1
claim: abelian
note: phi^2 + psi^2 nonzero

id: L_{2,8}
gen: W: phi(t)
gen: W: psi(t)
claim: abelian
note: phi/psi nonconstant

# two-dimensional representatives, non-Abelian

id: L_{2,9}
gen: Z: 1
gen: Z: t
claim: nonabelian2

id: L_{2,10}
gen: X: 1
gen: Z: t
claim: nonabelian2

id: L_{2,11}
gen: Y: 1; X: alpha
gen: Z: t
claim: nonabelian2

id: L_{2,12}
gen: W: exp(-t)
gen: Z: 1
claim: nonabelian2

# three-dimensional representatives, Abelian (zero action matrix)

id: L0_{3,1}
gen: Z: 1
gen: X: 1; Y: alpha
gen: X: beta; Y: gamma; W: mu
claim: abelian

id: L0_{3,2}
gen: Z: 1
gen: Y: 1
gen: X: alpha; W: beta
claim: abelian
note: alpha^2 + beta^2 nonzero

id: L0_{3,3}
gen: Z: 1
gen: W: 1
gen: X: alpha; Y: beta
claim: abelian
note: alpha^2 + beta^2 nonzero

id: L0_{3,4}
gen: X: 1
gen: Y: psi(t)
gen: W: omega(t)
claim: abelian

id: L0_{3,5}
gen: X: phi(t); Y: 1
gen: X: psi(t); Y: Phi(t)
gen: X: f(t); Y: g(t); W: k(t)
constraint: Phi'(t) - eps*(phi(t)*psi'(t) - phi'(t)*psi(t))
constraint: g'(t) - eps*(phi(t)*f'(t) - phi'(t)*f(t))
constraint: Phi(t)*g'(t) - Phi'(t)*g(t) - eps*(psi(t)*f'(t) - psi'(t)*f(t))
claim: abelian

id: L0_{3,6}
gen: W: 1
gen: X: beta; Y: 1
gen: Z: 1
claim: abelian

id: L0_{3,7}
gen: W: phi(t)
gen: X: psi(t); Y: 1
gen: X: f(t); Y: g(t)
constraint: g'(t) - eps*(psi(t)*f'(t) - psi'(t)*f(t))
claim: abelian
note: f^2 + g^2 nonzero

id: L0_{3,8}
gen: W: phi(t)
gen: W: psi(t)
gen: X: f(t); Y: g(t)
claim: abelian
note: phi/psi nonconstant; f^2 + g^2 nonzero

# three-dimensional, rank-one diagonal action

id: L_{3,4}
gen: Z: 1
gen: W: 1
gen: Z: t
claim: solvable M2

id: L_{3,7}
gen: Y: exp(-t)
gen: X: 1
gen: Z: 1
claim: solvable M2

id: L_{3,10}
gen: W: exp(-t)
gen: X: 1
gen: Z: 1
claim: solvable M2

id: L_{3,12}
gen: X: beta; Y: 1
gen: X: (2*t)^(1/2); Y: eps*beta*(2*t)^(1/2)
gen: Z: 2*t
claim: solvable M2
note: eps*beta^2 distinct from 1

id: L_{3,13}
gen: X: beta; Y: 1
gen: X: beta*(2*t)^(1/2); Y: (2*t)^(1/2)
gen: Z: 2*t; X: beta*g(t); Y: g(t)
constraint: eps*beta^2 - 1
claim: solvable M2

id: L_{3,23}
gen: W: exp(-t)
gen: X: beta; Y: 1; W: alpha
gen: Z: 1
claim: solvable M2

id: L_{3,28}
gen: W: exp(-t)
gen: W: 1
gen: Z: 1
claim: solvable M2

# three-dimensional, nilpotent action

id: L_{3,2}
gen: X: 1; Y: alpha
gen: Z: 1
gen: X: t; Y: alpha*t + beta
constraint: alpha^2 - eps
claim: solvable M3

id: L_{3,5}
gen: W: 1
gen: Z: 1
gen: W: t
claim: solvable M3

id: L_{3,11}
gen: W: omega(t)
gen: X: 1
gen: X: f(t); Y: psi(t)
constraint: f'(t) + 2*p*alpha^2*omega(t)
claim: solvable M3
note: alpha nonzero

id: L_{3,19}
gen: X: beta; Y: 1
gen: X: beta*t + nu; Y: t
gen: Z: -1
constraint: eps*beta^2 - 1
claim: solvable M3

id: L_{3,20}
gen: X: beta; Y: 1
gen: X: beta*t; Y: t
gen: Z: -1; X: beta*g(t); Y: g(t)
constraint: eps*beta^2 - 1
claim: solvable M3

id: L_{3,24}
gen: W: 1
gen: X: beta; Y: 1; W: t
gen: Z: 1
claim: solvable M3

id: L_{3,25}
gen: W: phi(t)
gen: X: psi(t); Y: 1
gen: X: f(t); Y: g(t)
constraint: g'(t) - 2*alpha*q*phi(t) - eps*(psi(t)*f'(t) - f(t)*psi'(t))
claim: solvable M3
note: alpha nonzero; the in-text variant fixes alpha = 1

id: L_{3,26}
gen: W: phi(t)
gen: Y: 1
gen: Y: g(t); W: k(t)
constraint: g'(t) - 2*q*phi(t)
claim: solvable M3

id: L_{3,29}
gen: W: 1
gen: W: -t
gen: Z: 1
claim: solvable M3

# three-dimensional, diagonal action

id: L_{3,1}
gen: Z: 1
gen: X: 1; Y: alpha
gen: Z: 2*t
claim: solvable M4 1

id: L_{3,3}
gen: Z: 1
gen: Y: 1
gen: Z: 2*t; W: alpha
claim: solvable M4 1

id: L_{3,6}
gen: X: 1
gen: Y: (2*t)^alpha
gen: Z: 2*t
claim: solvable M4 1 - alpha

id: L_{3,8}
gen: X: 1
gen: W: (2*t)^nu
gen: Z: 2*t
claim: solvable M4 -2*nu
note: nu distinct from -1/2

id: L_{3,9}
gen: X: 1
gen: W: (2*t)^(-1/2)
gen: Z: 2*t; X: 4*p*alpha*(2*t)^(1/2)
claim: solvable M4 1

id: L_{3,14}
gen: X: beta; Y: 1
gen: X: (2*t)^((1-a)/2); Y: eps*beta*(2*t)^((1-a)/2)
gen: Z: 2*t
claim: solvable M4 a
note: a distinct from 1; eps*beta^2 distinct from 1

id: L_{3,15}
gen: X: beta; Y: 1
gen: X: (2*t)^((1-a)/2); Y: eps*beta*(2*t)^((1-a)/2)
gen: Z: 2*t; X: beta*g(t); Y: g(t)
constraint: eps*beta^2 - 1
claim: solvable M4 a
note: a distinct from 1

id: L_{3,16}
gen: X: 1
gen: Y: 1
gen: Z: 2*t
claim: solvable M4 1

id: L_{3,27}
gen: W: t^(-nu)
gen: X: beta; Y: 1
gen: Z: t/nu
claim: solvable M4 1/(2*nu)
note: nu nonzero

id: L_{3,30}
gen: W: exp(-t)
gen: W: exp(-d*t)
gen: Z: 1
claim: solvable M4 d
note: d outside {0, 1}

# three-dimensional, complex action

id: L_{3,17}
gen: X: phi(t); Y: Psi(t)
gen: X: psi(t); Y: Phi(t)
gen: Z: 1; X: f(t); Y: g(t)
constraint: phi(t) - exp(-a*t)*cos(t)
constraint: psi(t) - exp(-a*t)*sin(t)
constraint: Phi(t) - rho*phi(t) - beta*psi(t)
constraint: Psi(t) - beta*phi(t) + rho*psi(t)
constraint: f(t) - delta*(rho*phi(t) - beta*psi(t)) - sigma*psi(t)
constraint: g(t) - sigma*(rho*phi(t) + beta*psi(t)) + delta*eps*psi(t)
constraint: eps - rho^2 - beta^2
claim: solvable M5 a
note: rho nonzero

id: L_{3,18}
gen: X: phi(t); Y: Psi(t)
gen: X: psi(t); Y: Phi(t)
gen: Z: 1; X: f(t); Y: g(t)
constraint: phi(t) - exp(-a*t)*cos(t)
constraint: psi(t) - exp(-a*t)*sin(t)
constraint: Phi(t) - beta*psi(t)
constraint: Psi(t) - beta*phi(t)
constraint: g(t) - beta*f(t)
constraint: eps - beta^2
claim: solvable M5 a

id: L_{3,31}
gen: W: exp(-a*t)*cos(t)
gen: W: exp(-a*t)*sin(t)
gen: Z: 1
claim: solvable M5 a

# three-dimensional, Jordan action

id: L_{3,21}
gen: X: beta; Y: 1
gen: X: -beta/2*ln(t) + nu; Y: -1/2*ln(t) + sigma
gen: Z: 2*t
constraint: eps*beta^2 - 1
claim: solvable M6

id: L_{3,22}
gen: X: beta; Y: 1
gen: X: -beta/2*ln(t); Y: -1/2*ln(t)
gen: Z: 2*t; X: beta*g(t); Y: g(t)
constraint: eps*beta^2 - 1
claim: solvable M6

id: L_{3,32}
gen: W: exp(t)
gen: W: t*exp(t)
gen: Z: -1
claim: solvable M6

# the simple three-dimensional algebra

id: L_s
gen: Z: 1
gen: Z: t
gen: Z: t^2
claim: sl2
)";
}

} // namespace cnls
