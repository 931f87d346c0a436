import sys

import atheris
from helpers import EnhancedDataProvider

with atheris.instrument_imports():
    from python_renner.cartan import classify_type, complete_realization, validate_gcm
    from python_renner.exceptions import RennerError
    from python_renner.faces import DominantPoint
    from python_renner.problem import parse_problem


def parse_text(fdp: EnhancedDataProvider) -> None:
    parse_problem(fdp.ConsumeRandomString())


def build_point(fdp: EnhancedDataProvider) -> None:
    gcm = validate_gcm(fdp.ConsumeCartanMatrix())
    classify_type(gcm)
    realization = complete_realization(gcm)
    point = DominantPoint(realization, [fdp.ConsumeIntInRange(0, 3) for _ in range(realization.dim)])
    lattice = point.fundamental_faces()
    for first in lattice.faces:
        for second in lattice.faces:
            meet = lattice.meet(first, second)
            assert lattice.leq(meet, first) and lattice.leq(meet, second)
    point.edges_at_mu(50)


def TestOneInput(data: bytes) -> None:
    fdp = EnhancedDataProvider(data)
    targets = [parse_text, build_point]
    target = fdp.PickValueInList(targets)

    try:
        target(fdp)
    except RennerError:
        return


def main():
    atheris.Setup(sys.argv, TestOneInput)
    atheris.Fuzz()


if __name__ == "__main__":
    main()
