"""Command line front end.

    mixsat digits 54 --base 3,2,5,4
    mixsat grundy 2,3 --game misere-sat --base 2
    mixsat table --game misere --bounds 9,9
    mixsat verify --base 2 --k 2 --bounds 9 --checks sg1,sg2 --max-weight 2
    mixsat move 2,2 --target 0 --base 2
    mixsat weight --base 6,2 --k 3
    mixsat play 2,2 --game misere

Exit codes: 0 ok, 1 a verification failed, 2 bad arguments, 3 position
outside the game, 4 no closed form for the game, 5 no option with the
requested value.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import formulas
from .exceptions import DomainError, MixsatError, NoSuchMoveError
from .games import GrundyOracle, MoveSet, PositionSet, grundy_table, move_member
from .mixed_radix import INF, Base, ord, to_digits
from .saturation import check_sg1, check_sg2, saturation_report
from .solver import best_move, construct_move

EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_NO_FORMULA, EXIT_NO_MOVE = 1, 2, 3, 4, 5

GAMES = ("nim", "misere", "welter", "nim-sat", "misere-sat", "welter-sat")


class UsageError(Exception):
    pass


class Exit(Exception):
    def __init__(self, code, message=""):
        super().__init__(message)
        self.code = code
        self.message = message


@dataclass(frozen=True)
class GameSpec:
    game: str
    base: Base
    max_weight: int | None = None

    def __post_init__(self):
        if self.game not in GAMES:
            raise UsageError(f"unknown game {self.game!r}")
        if self.game == "welter-sat" and not self.base.is_constant:
            raise UsageError("welter-sat needs a constant base")

    @property
    def saturated(self) -> bool:
        return self.game.endswith("-sat")

    @property
    def value_base(self) -> Base:
        return self.base if self.saturated else Base.constant(2)

    def pset(self, k: int) -> PositionSet:
        kind = {"nim": "all", "misere": "misere", "welter": "welter"}[self.game.removesuffix("-sat")]
        return PositionSet(kind, k)

    def mset(self) -> MoveSet:
        if self.saturated:
            return MoveSet.ord(self.base, self.max_weight)
        return MoveSet.unit()

    def formula(self, k: int):
        """Closed-form evaluator for this game, or ``None`` if none is known."""
        family = self.game.removesuffix("-sat")
        cap = self.max_weight if self.saturated else None
        if family == "misere":
            if not self.saturated:
                return None
            if cap is not None and cap < formulas.weight_formula(self.base, k).w:
                return None
            return lambda X: formulas.phi(X, self.base)
        if cap is not None and cap < k:
            return None
        b = self.value_base
        if family == "nim":
            return lambda X: formulas.sigma(X, b)
        return lambda X: formulas.welter_sg(X, b.tail)


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}") from None
    if any(v < 0 for v in vals):
        raise UsageError(f"{what} entries must be nonnegative")
    return vals


def parse_base(text: str) -> Base:
    try:
        return Base.parse(text)
    except MixsatError as e:
        raise UsageError(str(e)) from None


def _bounds(args, k: int | None = None) -> tuple[int, ...]:
    if args.bounds is None:
        raise UsageError("--bounds is required")
    bounds = parse_ints(args.bounds, "bounds")
    if any(b <= 0 for b in bounds):
        raise UsageError("bounds must be positive")
    if k is not None and len(bounds) == 1:
        bounds = bounds * k
    if k is not None and len(bounds) != k:
        raise UsageError(f"bounds {bounds} do not match k={k}")
    return bounds


def _spec(args) -> GameSpec:
    return GameSpec(args.game, parse_base(args.base), args.max_weight)


def cmd_digits(args, out):
    base = parse_base(args.base)
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    o = ord(n, base)
    print(f"{to_digits(n, base)} ord={'inf' if o == INF else o}", file=out)


def cmd_grundy(args, out):
    spec = _spec(args)
    X = parse_ints(args.position, "position")
    pset = spec.pset(len(X))
    if X not in pset:
        raise Exit(EXIT_DOMAIN, f"{X} is not a {spec.game} position")
    method = args.method
    f = spec.formula(len(X))
    if method == "formula" and f is None:
        raise Exit(EXIT_NO_FORMULA, f"no closed form for {spec.game}"
                   + (" with this --max-weight" if spec.max_weight is not None else ""))
    if method == "brute" or f is None:
        value = GrundyOracle(pset, spec.mset())(X)
    else:
        value = f(X)
    line = str(value)
    if args.digits:
        line += " " + str(to_digits(value, spec.value_base))
    print(line, file=out)


def cmd_table(args, out):
    spec = _spec(args)
    bounds = _bounds(args)
    table = grundy_table(bounds, spec.pset(len(bounds)), spec.mset(), game=spec.game)
    if args.format == "json":
        print(table.to_json(), file=out)
    else:
        if len(bounds) > 2:
            raise UsageError("tsv output needs at most two coordinates; use --format json")
        out.write(table.to_tsv())


def cmd_verify(args, out):
    spec = _spec(args)
    bounds = _bounds(args, args.k)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    reports = []
    for check in checks:
        if check == "sg1":
            reports.append(check_sg1(bounds, spec.base, spec.mset()))
        elif check == "sg2":
            reports.append(check_sg2(bounds, spec.base, spec.mset()))
        elif check == "saturation":
            reports.append(saturation_report(bounds, spec.pset(len(bounds)), spec.mset(), spec.base))
        else:
            raise UsageError(f"unknown check {check!r}")
    verdict = all(r.verdict for r in reports)
    print(json.dumps({"verdict": verdict, "reports": [r.to_dict() for r in reports]}, indent=2), file=out)
    if not verdict:
        raise Exit(EXIT_FAIL)


def cmd_move(args, out):
    base = parse_base(args.base)
    X = parse_ints(args.position, "position")
    try:
        mc = construct_move(X, args.target, base)
    except DomainError as e:
        raise Exit(EXIT_DOMAIN, str(e)) from None
    except NoSuchMoveError:
        raise Exit(EXIT_NO_MOVE, "no such option (SG1)") from None
    print(mc.to_json(), file=out)


def cmd_weight(args, out):
    rep = formulas.weight_formula(parse_base(args.base), args.k)
    print(f"w={rep.w} level={rep.achieving_level} case={rep.case_tag}", file=out)


def _read_move(line: str, X):
    """``"i amount"`` subtracts from one coordinate; ``"c0,c1,..."`` is a full move vector."""
    line = line.strip()
    if "," in line:
        C = parse_ints(line, "move")
    else:
        parts = line.split()
        if len(parts) == 1 and len(X) == 1:
            parts = ["0", parts[0]]
        if len(parts) != 2:
            raise UsageError("enter 'i amount' or a comma-separated move vector")
        i, amount = int(parts[0]), int(parts[1])
        if not 0 <= i < len(X):
            raise UsageError(f"coordinate {i} out of range")
        C = tuple(amount if h == i else 0 for h in range(len(X)))
    if len(C) != len(X):
        raise UsageError(f"move needs {len(X)} entries")
    return C


def cmd_play(args, out, inp):
    spec = _spec(args)
    X = parse_ints(args.position, "position")
    pset, mset = spec.pset(len(X)), spec.mset()
    if X not in pset:
        raise Exit(EXIT_DOMAIN, f"{X} is not a {spec.game} position")
    oracle = None if (spec.game == "misere-sat" and spec.formula(len(X))) else GrundyOracle(pset, mset)
    engine_turn = args.engine_first
    while True:
        print(f"position: {','.join(map(str, X))}", file=out)
        if engine_turn:
            bm = best_move(X, spec.base, mset, pset, oracle=oracle)
            if bm is None:
                print("engine has no move: you win", file=out)
                return
            X = bm.resulting
            print(f"engine: {','.join(map(str, bm.move))} -> {','.join(map(str, X))}", file=out)
        else:
            if best_move(X, spec.base, mset, pset, oracle=oracle) is None:
                print("you have no move: engine wins", file=out)
                return
            while True:
                out.write("your move> ")
                out.flush()
                line = inp.readline()
                if not line or line.strip() in ("q", "quit"):
                    print("\nquit", file=out)
                    return
                try:
                    C = _read_move(line, X)
                except (UsageError, ValueError) as e:
                    print(f"invalid: {e}", file=out)
                    continue
                Y = tuple(a - c for a, c in zip(X, C))
                if not move_member(C, mset) or Y not in pset:
                    print("illegal move", file=out)
                    continue
                X = Y
                break
        engine_turn = not engine_turn


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", default="2", help="mixed radix, e.g. 3,2,5,4 (last entry repeats)")
    common.add_argument("--bounds", help="box size per coordinate, e.g. 9,9")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--max-weight", type=int, default=None, dest="max_weight")
    common.add_argument("--digits", action="store_true", help="also print the mixed-radix digits")
    common.add_argument("--method", choices=("auto", "formula", "brute"), default="auto")
    common.add_argument("--game", choices=GAMES, default="misere-sat")

    p = argparse.ArgumentParser(prog="mixsat", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("digits", parents=[common], help="mixed-radix digits and ord")
    s.add_argument("n", type=int)
    s = sub.add_parser("grundy", parents=[common], help="Grundy value of a position")
    s.add_argument("position")
    sub.add_parser("table", parents=[common], help="Grundy table over a box")
    s = sub.add_parser("verify", parents=[common], help="check SG1/SG2/saturation over a box")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--checks", default="sg1,sg2")
    s = sub.add_parser("move", parents=[common], help="construct a move to a target value")
    s.add_argument("position")
    s.add_argument("--target", type=int, required=True)
    s = sub.add_parser("weight", parents=[common], help="least move weight realising phi")
    s.add_argument("--k", type=int, required=True)
    s = sub.add_parser("play", parents=[common], help="play against the engine")
    s.add_argument("position")
    s.add_argument("--engine-first", action="store_true")
    return p


def main(argv=None, out=None, inp=None) -> int:
    out = sys.stdout if out is None else out
    inp = sys.stdin if inp is None else inp
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handlers = {
        "digits": cmd_digits, "grundy": cmd_grundy, "table": cmd_table, "verify": cmd_verify,
        "move": cmd_move, "weight": cmd_weight,
    }
    try:
        if args.command == "play":
            cmd_play(args, out, inp)
        else:
            handlers[args.command](args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exit as e:
        if e.message:
            print(f"error: {e.message}", file=sys.stderr)
        return e.code
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
