"""The declarative model format and the command line front end.

Run with:  python3 demos/05_model_files_and_cli.py
"""

import os
import tempfile

from liedouble import parse_model, print_model
from liedouble.cli import main

MODEL = """\
# aff(1) matched with an abelian rank-2 complement, plus friends
algebroid A { base; rank 2; bracket [1,2] = e2; }
algebroid B { base; rank 2; }
rep rho A on B { e1 = [[1,0],[0,0]]; e2 = [[0,1],[0,0]]; }
rep sigma B on A { }
matchedpair MP { A = A; B = B; rho = rho; sigma = sigma; }

poisson P { vars x y; pi [x,y] = x^2 + 1/2; }
dvb D { dims 2 2 1; sign plus; }
"""

print("== parse -> print is a fixed point ==")
model = parse_model(MODEL)
printed = print_model(model)
print("round trip equal:", parse_model(printed) == model)

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "demo.ld")
    with open(path, "w") as fh:
        fh.write(MODEL)

    print()
    print("== check verbs return 0 (pass), 1 (fail), 2 (usage/parse) ==")
    code = main(["check", "matched-pair", "MP", "-f", path])
    print("exit:", code)
    code = main(["check", "poisson", "P", "-f", path, "--json"])
    print("exit:", code)

    print()
    print("== building the double writes a new model file ==")
    out = os.path.join(tmp, "double.ld")
    main(["build", "double", "MP", "-f", path, "-o", out])
    with open(out) as fh:
        print(fh.read())
    code = main(["check", "algebroid", "MP_double", "-f", out])
    print("exit:", code)

    print()
    print("== double vector bundle verbs ==")
    main(["dvb", "zmaps", "D", "-f", path])
    main(["dvb", "pair", "D", "-f", path])
