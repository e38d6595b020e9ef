"""Program corpus for the parser tests: 50 valid programs and 20 malformed ones."""

VALID = [
    "let H = heaviside(c=1, at=0); integrate H dH on [-1,1];",
    "let f = piecewise on [0,1] { (0,1): x^2; at 0: 0; at 1: 1 };",
    "let f = x; integrate f df on [0,1];",
    "let f = x^2; let a = x; compare f da on [0,1];",
    "let a = heaviside(c=1/3, at=0); let b = heaviside(c=1/5, at=0); compare a db on [-1,1];",
    "let a = heaviside(c=0.25, at=0); decompose a on [-1,1];",
    "let a = x + heaviside(c=1, at=1/2); let b = x - 2*heaviside(c=0, at=1/3); parts a b on [0,1];",
    "let f = dirichlet; let a = heaviside(c=1, at=1/2); check f da on [0,1];",
    "let f = dirichlet; let a = x; check f da on [0,1];",
    "let H = heaviside(c=1, at=0); sums mrs H dH on [-1,1];",
    "let H = heaviside(c=1, at=0); sums mrs H dH (1/10, 1/100) on [-1,1];",
    "let H = heaviside(c=1, at=0); sums rps H dH (4) on [-1,1];",
    "let H = heaviside(c=1, at=0); sums rrs H dH (1/2) on [-1,1];",
    "let f = 3*x^3 - 2*x + 1; let a = x^2; integrate f da on [0,2];",
    "let f = (x + 1)^2; let a = x; integrate f da on [-1,1];",
    "let f = 1/2; let a = x; integrate f da on [0,1];",
    "let f = -x; let a = x; integrate f da on [0,1];",
    "let f = 0.125*x; let a = heaviside(c=1/2, at=0.5); integrate f da on [0,1];",
    "let g = x; let f = g + 1; let a = 2*g; integrate f da on [0,1];",
    "let f = piecewise on [-1,1] { (-1,0): 0; (0,1): 1; at -1: 0; at 0: 1/2; at 1: 1 };",
    "let f = piecewise on [0,2] { [0,1]: x; (1,2): 2 - x; at 2: 0 };",
    "let f = piecewise on [0,3] { (0,1): 1; [1,2]: 2; (2,3): 3; at 0: 1; at 3: 3; };",
    "let s = piecewise on [0,1] { (0,1/2): 2; (1/2,1): 3; at 0: 7; at 1/2: 11; at 1: 13 }; let a = x; integrate s da on [0,1];",
    "let a = piecewise on [0,1] { [0,1/2]: x; (1/2,1): x + 1; at 1: 2 }; decompose a on [0,1];",
    "let a = piecewise on [0,1] { [0,1]: x^3 - x }; decompose a on [0,1];",
    "let f = x^4; let a = x + heaviside(c=1, at=1/2); integrate f da on [0,1];",
    "let f = x; let a = heaviside(c=0, at=0); compare f da on [0,1];",
    "let f = x; let a = heaviside(c=1, at=1); compare f da on [0,1];",
    "let a = heaviside(c=1/2, at=0) + heaviside(c=1/2, at=1/2); decompose a on [-1,1];",
    "let a = x - heaviside(c=1, at=0); let b = x + heaviside(c=0, at=0); parts a b on [-1,1];",
    "let f = 2*(x - 1) + 3; let a = x; integrate f da on [0,1];",
    "let f = x + x + x; let a = x; integrate f da on [0,1];",
    "let f = x - (x - 1); let a = x; integrate f da on [0,1];",
    "let f = ((x)); let a = x; integrate f da on [0,1];",
    "let f = x^0; let a = x; integrate f da on [0,1];",
    "let f = 10; let a = heaviside(c=1, at=2); integrate f da on [0,3];",
    "let f = x; let a = x; integrate f da on [0,1]; compare f da on [0,1/2]; check f da on [1/4,3/4];",
    "let a = 3; decompose a on [0,1];",
    "let a = -x; decompose a on [0,1];",
    "# comment line\nlet f = x; # trailing\nlet a = x;\nintegrate f da on [0,1];",
    "let   f=x ;let a=x;integrate f da on[0,1];",
    "let f = x;\n\n\nlet a = x;\n",
    "",
    "let f = piecewise on [0,1] { (0,1): 1 - x + x^2; at 0: 5; at 1: 5 }; let a = heaviside(c=1, at=1/2); compare f da on [0,1];",
    "let f = heaviside(c=1/3, at=0); let a = heaviside(c=1/5, at=0); sums mrs f da on [-1,1];",
    "let a = x + 1/2*heaviside(c=1, at=1/2) + 1/4*heaviside(c=1, at=3/4); let f = 1; integrate f da on [0,1];",
    "let f = 1.5*x^2 - 0.5; let a = x; integrate f da on [-1,1];",
    "let f = x; let a = x^2; sums rps f da on [0,1];",
    "let f = x; let a = x; sums rrs f da (1/4, 1/8) on [0,1];",
    "let alpha = x; let beta = heaviside(c=1, at=1/2); parts alpha beta on [0,1];",
]

# (program, line, column) of the first offending byte
INVALID = [
    ("let f = heaviside(c=2", 1, 22),                      # truncated input
    ("let f = x; let f = x^2;", 1, 16),                    # duplicate name
    ("let f = g; let g = x;", 1, 9),                       # forward reference
    ("let f = x; integrate f dg on [0,1];", 1, 25),         # unknown name
    ("let f = x; integrate f df on [1,0];", 1, 30),         # empty interval
    ("let f = x; integrate f df on (0,1);", 1, 30),         # open query interval
    ("let f = piecewise on [0,1] { (0,1/2): 1 };", 1, 30),  # pieces do not cover
    ("let f = piecewise on [0,1] { [0,1]: x; at 1/2: 3 };", 1, 40),  # point covered twice
    ("let f = piecewise on [0,1] { (0,2): x };", 1, 30),    # piece outside domain
    ("let a = heaviside(c=1, at=0); decompose a on [0,1];", 1, 9),   # non-reduced at lower end
    ("let a = heaviside(c=0, at=1); decompose a on [0,1];", 1, 9),   # non-reduced at upper end
    ("let f = x integrate f df on [0,1];", 1, 11),          # missing semicolon
    ("let f = x^y;", 1, 11),                                # exponent must be an integer
    ("let 3 = x;", 1, 5),                                   # bad name
    ("let f = x; integrate f on [0,1];", 1, 24),            # missing d
    ("let f = x; sums abc f df on [0,1];", 1, 17),          # unknown probe
    ("let f = x; sums mrs f df (0) on [0,1];", 1, 27),      # mesh must be positive
    ("let f = dirichlet; integrate f df on [0,1];", 1, 33), # Dirichlet as integrator
    ("let f = dirichlet + x;", 1, 9),                       # Dirichlet inside arithmetic
    ("let f = x;\nlet a = x;\nintegrate f da on [0,1/0];", 3, 22),  # zero denominator
]
