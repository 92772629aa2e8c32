import logging
from fractions import Fraction
from itertools import product
from typing import Callable, List, Sequence, Tuple, Union

from tangentcone.config import Config
from tangentcone.models.algebra import (
    BLOCK_KEYS, AlgebraPoint, BilinearMap, BlockMap, ChainInfeasible, CorollaryReport,
    DimIdentityReport, LinearConstraint, ObstructionChain, QuadraticObstructionResult,
    Splitting, SymMapBlocks, Thm1Report
)
from tangentcone.models.linalg import (
    AffineSolution, ExactMatrix, SubspaceBasis, Vector, combine, unit_vector, zero_vector
)
from tangentcone.models.polynomial import MultiPoly
from tangentcone.services.linalg_service import ExactLinearAlgebra
from tangentcone.services.scheme_service import AlgebraSchemeService
from tangentcone.utils.exceptions import DimensionMismatchError, PreconditionError

logger = logging.getLogger(__name__)

CHAIN_STAGES = ('e:co', 'e:ob1', 'e:ob2', 'g22')


def _sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _add(*vectors: Sequence[Fraction]) -> Vector:
    return tuple(sum(xs, Fraction(0)) for xs in zip(*vectors))


def _affine_system(nunknowns: int, residual: Callable[[Vector], Vector]) -> Tuple[ExactMatrix, Vector]:
    """Matrix A and right-hand side b with residual(u) = A u - b, read off from its values at unit vectors."""
    base = residual(zero_vector(nunknowns))
    columns = [_sub(residual(unit_vector(nunknowns, i)), base) for i in range(nunknowns)]
    matrix = ExactMatrix.from_columns(columns, len(base))
    return matrix, tuple(-x for x in base)


def _solve(nunknowns: int, residual: Callable[[Vector], Vector]) -> AffineSolution:
    matrix, rhs = _affine_system(nunknowns, residual)
    logger.debug(f"linear system: {matrix.rows} equations, {nunknowns} unknowns")
    return ExactLinearAlgebra.solve_affine(matrix, rhs)


def _sym_pairs(d: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(d) for b in range(a, d)]


def _sym_block(d: int, out: int, params: Sequence[Fraction]) -> BlockMap:
    """Symmetric block K^d x K^d -> K^out from one value per pair a <= b."""
    values = {}
    for p, (a, b) in enumerate(_sym_pairs(d)):
        values[(a, b)] = values[(b, a)] = tuple(params[p * out:(p + 1) * out])
    return BlockMap.from_function(d, d, out, lambda a, b: values[(a, b)])


def _sym_params(block: BlockMap) -> Vector:
    return tuple(c for a, b in _sym_pairs(block.left) for c in block.basis_value(a, b))


class _SplitData:
    """Multiplication of N read in split coordinates: mu(x, y) in N2 for x, y in N1."""

    def __init__(self, N: BilinearMap, split: Splitting):
        self.d = split.d
        self.r = split.r
        table = split.split_map(N)
        d = self.d
        self.mu = BlockMap.from_function(d, d, self.r, lambda a, b: table.basis_product(a, b)[d:])
        self.n1_units = [unit_vector(d, a) for a in range(d)]
        self.n2_units = [unit_vector(self.r, k) for k in range(self.r)]


def _require_nilpotent(N: BilinearMap, split: Splitting):
    violations = []
    if not N.is_symmetric:
        violations.append("table is not commutative")
    if not N.is_nilpotent3:
        violations.append("table is not degree-3 nilpotent")
    if split.n != N.n:
        violations.append(f"splitting of K^{split.n} used with an algebra on K^{N.n}")
    if violations:
        raise PreconditionError(violations)


def _co_residual(data: _SplitData, f11: BlockMap, f12: BlockMap) -> Vector:
    """x f11(y,z) + f12(x,yz) - f12(z,xy) - f11(x,y) z over N1 basis triples."""
    mu = data.mu
    out = []
    for x, y, z in product(data.n1_units, repeat=3):
        out.extend(_add(
            mu(x, f11(y, z)),
            f12(x, mu(y, z)),
            tuple(-c for c in f12(z, mu(x, y))),
            tuple(-c for c in mu(f11(x, y), z)),
        ))
    return tuple(out)


def _ob1_residual(data: _SplitData, f11: BlockMap, g12: BlockMap) -> Vector:
    """f11(f11(x,y),z) - f11(x,f11(y,z)) + g12(z,xy) - g12(x,yz)."""
    mu = data.mu
    out = []
    for x, y, z in product(data.n1_units, repeat=3):
        out.extend(_add(
            f11(f11(x, y), z),
            tuple(-c for c in f11(x, f11(y, z))),
            g12(z, mu(x, y)),
            tuple(-c for c in g12(x, mu(y, z))),
        ))
    return tuple(out)


def _ob2_residual(data: _SplitData, f12: BlockMap, g12: BlockMap) -> Vector:
    """f12(y,f12(x,w)) - f12(x,f12(y,w)) - x g12(y,w) + y g12(x,w)."""
    mu = data.mu
    out = []
    for x, y in product(data.n1_units, repeat=2):
        for w in data.n2_units:
            out.extend(_add(
                f12(y, f12(x, w)),
                tuple(-c for c in f12(x, f12(y, w))),
                tuple(-c for c in mu(x, g12(y, w))),
                mu(y, g12(x, w)),
            ))
    return tuple(out)


def _g22_residual(data: _SplitData, f11: BlockMap, f12: BlockMap, g12: BlockMap, g22: BlockMap) -> Vector:
    """f12(f11(x,y),w) - f12(x,f12(y,w)) - x g12(y,w) + g22(xy,w)."""
    mu = data.mu
    out = []
    for x, y in product(data.n1_units, repeat=2):
        for w in data.n2_units:
            out.extend(_add(
                f12(f11(x, y), w),
                tuple(-c for c in f12(x, f12(y, w))),
                tuple(-c for c in mu(x, g12(y, w))),
                g22(mu(x, y), w),
            ))
    return tuple(out)


class ObstructionService:
    """Block decomposition and the obstruction systems at a degree-3 nilpotent algebra."""

    @staticmethod
    def split_blocks(m: BilinearMap, split: Splitting) -> SymMapBlocks:
        """
        Decompose a symmetric map into its blocks f_ij^k in split coordinates.

        Args:
            m: Symmetric bilinear map on K^n
            split: Splitting N = N1 + N2

        Returns:
            SymMapBlocks keyed by BLOCK_KEYS

        Raises:
            PreconditionError: If m is not symmetric
        """
        if m.n != split.n:
            raise DimensionMismatchError(f"map on K^{m.n} split with a splitting of K^{split.n}")
        if not m.is_symmetric:
            raise PreconditionError("only symmetric maps split into blocks f_ij^k")
        table = split.split_map(m)
        d, r = split.d, split.r
        dims = {'1': d, '2': r}
        offsets = {'1': 0, '2': d}
        blocks = {}
        for key in BLOCK_KEYS:
            i, j, k = key[0], key[1], key[3]
            blocks[key] = BlockMap.from_function(
                dims[i], dims[j], dims[k],
                lambda a, b, i=i, j=j, k=k: table.basis_product(offsets[i] + a, offsets[j] + b)[
                    offsets[k]:offsets[k] + dims[k]]
            )
        return SymMapBlocks(d=d, r=r, blocks=blocks)

    @staticmethod
    def reassemble(blocks: SymMapBlocks, split: Splitting) -> BilinearMap:
        """Inverse of split_blocks: rebuild the map in original coordinates."""
        d, r = blocks.d, blocks.r
        n = d + r

        def value(i, j):
            si, sj = ('1', i) if i < d else ('2', i - d), ('1', j) if j < d else ('2', j - d)
            if si[0] == '2' and sj[0] == '1':
                si, sj = sj, si
            key = si[0] + sj[0]
            return blocks[key + '^1'].basis_value(si[1], sj[1]) + blocks[key + '^2'].basis_value(si[1], sj[1])

        return split.unsplit_map(BilinearMap.from_function(n, value))

    @staticmethod
    def f11_block(m: BilinearMap, split: Splitting) -> BlockMap:
        table = split.split_map(m)
        d = split.d
        return BlockMap.from_function(d, d, d, lambda a, b: table.basis_product(a, b)[:d])

    @staticmethod
    def solve_chain(N: BilinearMap, split: Splitting, f11: BlockMap) -> Union[ObstructionChain, ChainInfeasible]:
        """
        Solve the obstruction equations stage by stage for a given f11.

        f12 comes from the first-order equation; g12 from the two
        obstruction equations; g22 from its defining equation, solved as a
        general bilinear map so its symmetry can be tested afterwards.
        Only the canonical f12 (free variables zero) is carried forward,
        so later stages are exact when the f12 kernel is trivial.

        Args:
            N: Degree-3 nilpotent commutative algebra
            split: Splitting of N
            f11: Symmetric block S^2 N1 -> N1

        Returns:
            ObstructionChain, or ChainInfeasible naming the first stage
            whose linear system is inconsistent

        Raises:
            PreconditionError: If N or f11 violate the preconditions
        """
        _require_nilpotent(N, split)
        d, r = split.d, split.r
        if f11.shape != (d, d, d):
            raise DimensionMismatchError(f"f11 has shape {f11.shape}, expected {(d, d, d)}")
        if not f11.is_symmetric:
            raise PreconditionError("f11 must be symmetric")
        data = _SplitData(N, split)

        n12 = d * r * r
        nG = d * r * d
        n22 = r * r * r

        co = _solve(n12, lambda u: _co_residual(data, f11, BlockMap(d, r, r, u)))
        if not co.consistent:
            logger.info("solve_chain: infeasible at e:co")
            return ChainInfeasible('e:co', 'no f12 solves the first-order equation')
        f12 = BlockMap(d, r, r, co.particular)

        ob1 = _solve(nG, lambda u: _ob1_residual(data, f11, BlockMap(d, r, d, u)))
        if not ob1.consistent:
            logger.info("solve_chain: infeasible at e:ob1")
            return ChainInfeasible('e:ob1', 'no g12 solves the first obstruction equation')

        def ob12(u):
            g12 = BlockMap(d, r, d, u)
            return _ob1_residual(data, f11, g12) + _ob2_residual(data, f12, g12)

        ob2 = _solve(nG, ob12)
        if not ob2.consistent:
            logger.info("solve_chain: infeasible at e:ob2")
            return ChainInfeasible('e:ob2', 'no g12 solves both obstruction equations')

        def full(u):
            g12 = BlockMap(d, r, d, u[:nG])
            g22 = BlockMap(r, r, r, u[nG:])
            return ob12(u[:nG]) + _g22_residual(data, f11, f12, g12, g22)

        last = _solve(nG + n22, full)
        if not last.consistent:
            logger.info("solve_chain: infeasible at g22")
            return ChainInfeasible('g22', 'g22 is not well defined on N2 x N2')
        chain = ObstructionChain(
            f11=f11, f12=f12,
            g12=BlockMap(d, r, d, last.particular[:nG]),
            g22=BlockMap(r, r, r, last.particular[nG:]),
            f12_kernel_dim=co.kernel_dim,
        )
        logger.debug(f"solve_chain: solved, f12 kernel dim {co.kernel_dim}")
        return chain

    @staticmethod
    def co_residual(N: BilinearMap, split: Splitting, f11: BlockMap, f12: BlockMap) -> Vector:
        return _co_residual(_SplitData(N, split), f11, f12)

    @staticmethod
    def ob1_residual(N: BilinearMap, split: Splitting, chain: ObstructionChain) -> Vector:
        return _ob1_residual(_SplitData(N, split), chain.f11, chain.g12)

    @staticmethod
    def check_ob2(N: BilinearMap, split: Splitting, chain: ObstructionChain) -> Vector:
        """Residual of the second obstruction equation; all zero iff it holds."""
        return _ob2_residual(_SplitData(N, split), chain.f12, chain.g12)

    @staticmethod
    def g22_commutativity_check(N: BilinearMap, split: Splitting, chain: ObstructionChain) -> bool:
        """Explicit symmetry test of the derived g22."""
        if chain.g22.shape != (split.r,) * 3:
            raise DimensionMismatchError(f"g22 has shape {chain.g22.shape}, expected {(split.r,) * 3}")
        return chain.g22.is_symmetric

    @staticmethod
    def _delta_system(N: BilinearMap, lhs: Vector) -> Tuple[ExactMatrix, Vector]:
        """delta(star) = lhs with delta(star)(x,y,z) = x(y*z) - (xy)*z + x*(yz) - (x*y)z."""
        n = N.n
        pairs = _sym_pairs(n)
        units = [unit_vector(n, i) for i in range(n)]

        def residual(params):
            values = {}
            for p, (a, b) in enumerate(pairs):
                values[(a, b)] = values[(b, a)] = tuple(params[p * n:(p + 1) * n])
            star = BilinearMap.from_function(n, lambda a, b: values[(a, b)])
            out = []
            for x, y, z in product(units, repeat=3):
                out.extend(_add(
                    N.product(x, star(y, z)),
                    tuple(-c for c in star(N.product(x, y), z)),
                    star(x, N.product(y, z)),
                    tuple(-c for c in N.product(star(x, y), z)),
                ))
            return _sub(out, lhs)

        return _affine_system(len(pairs) * n, residual)

    @staticmethod
    def _star_from_params(n: int, params: Sequence[Fraction]) -> BilinearMap:
        values = {}
        for p, (a, b) in enumerate(_sym_pairs(n)):
            values[(a, b)] = values[(b, a)] = tuple(params[p * n:(p + 1) * n])
        return BilinearMap.from_function(n, lambda a, b: values[(a, b)])

    @staticmethod
    def _require_algebra(N: BilinearMap, *maps: BilinearMap):
        violations = []
        if not N.is_symmetric:
            violations.append("table is not commutative")
        elif not N.is_associative:
            violations.append("table is not associative")
        for m in maps:
            if m.n != N.n:
                violations.append(f"map on K^{m.n} for an algebra on K^{N.n}")
            elif not m.is_symmetric:
                violations.append("maps must be symmetric")
        if violations:
            raise PreconditionError(violations)

    @staticmethod
    def quadratic_obstruction(N: BilinearMap, circ: BilinearMap) -> QuadraticObstructionResult:
        """
        Solve (x o y) o z - x o (y o z) = delta(star) for a symmetric star.

        Returns:
            QuadraticObstructionResult; infeasible means the first-order
            direction circ is obstructed at order two

        Raises:
            PreconditionError: If N is not commutative and associative or circ is not symmetric
        """
        ObstructionService._require_algebra(N, circ)
        n = N.n
        units = [unit_vector(n, i) for i in range(n)]
        lhs = tuple(c for x, y, z in product(units, repeat=3) for c in circ.associator(x, y, z))
        matrix, rhs = ObstructionService._delta_system(N, lhs)
        solution = ExactLinearAlgebra.solve_affine(matrix, rhs)
        if not solution.consistent:
            logger.info("quadratic_obstruction: infeasible")
            return QuadraticObstructionResult(feasible=False)
        return QuadraticObstructionResult(
            feasible=True,
            star=ObstructionService._star_from_params(n, solution.particular),
            kernel_dim=solution.kernel_dim,
        )

    @staticmethod
    def linearized_constraint(N: BilinearMap, circ: BilinearMap, star_map: BilinearMap) -> LinearConstraint:
        """
        Constraint on star induced by one map *:

        (x o y) * z + (x * y) o z - x o (y * z) - x * (y o z) = delta(star)(x, y, z)
        """
        ObstructionService._require_algebra(N, circ, star_map)
        n = N.n
        units = [unit_vector(n, i) for i in range(n)]
        lhs = []
        for x, y, z in product(units, repeat=3):
            lhs.extend(_add(
                star_map(circ(x, y), z),
                circ(star_map(x, y), z),
                tuple(-c for c in circ(x, star_map(y, z))),
                tuple(-c for c in star_map(x, circ(y, z))),
            ))
        matrix, rhs = ObstructionService._delta_system(N, tuple(lhs))
        return LinearConstraint(star_map=star_map, matrix=matrix, rhs=rhs)

    @staticmethod
    def linearized_system(N: BilinearMap, circ: BilinearMap, split: Splitting) -> List[LinearConstraint]:
        """One constraint per basis map of L(S^2(N/N^2), N^2)."""
        return [
            ObstructionService.linearized_constraint(
                N, circ, AlgebraSchemeService.lsym_map(split, a, b, k))
            for a, b in _sym_pairs(split.d) for k in range(split.r)
        ]

    @staticmethod
    def solve_constraint(constraint: LinearConstraint) -> AffineSolution:
        return ExactLinearAlgebra.solve_affine(constraint.matrix, constraint.rhs)

    @staticmethod
    def relation_space(N: BilinearMap, split: Splitting) -> SubspaceBasis:
        """Z = ker(mu: S^2 N1 -> N2), in coordinates indexed by pairs a <= b."""
        data = _SplitData(N, split)
        pairs = _sym_pairs(split.d)
        columns = [data.mu.basis_value(a, b) for a, b in pairs]
        matrix = ExactMatrix.from_columns(columns, split.r)
        return ExactLinearAlgebra.rank_kernel(matrix).kernel

    @staticmethod
    def thm1_test(N: AlgebraPoint, split: Splitting,
                  witness_limit: int = Config.WITNESS_LIMIT) -> Thm1Report:
        """
        Does every admissible f11 vanish on Z = ker(mu: S^2 N1 -> N2)?

        Unknowns are (f11, f12) with f12^1 = f22^1 = f22^2 = 0. The
        constraints are the first-order equation and, for every basis map
        * of L(S^2 N1, N2), the solvability of the linearized equation,
        i.e. its left side annihilated by the left kernel of the same
        first-order operator. When the linear hull of solutions does not
        vanish on Z, hull basis elements are run through the full
        quadratic chain; one that survives is a witness against the claim.

        Args:
            N: Degree-3 nilpotent algebra
            split: Splitting of N
            witness_limit: Maximum number of hull elements checked

        Returns:
            Thm1Report with certificate 'vacuous', 'linear_hull', 'witness'
            or 'quadratic_screen'

        Raises:
            PreconditionError: If N is not degree-3 nilpotent or not in A_{n,r}
        """
        _require_nilpotent(N, split)
        invariants = AlgebraSchemeService.algebra_invariants(N)
        if not invariants.in_anr(split.r):
            raise PreconditionError(f"algebra is not in A_(n,r) for r = {split.r}")
        d, r = split.d, split.r
        data = _SplitData(N, split)
        pairs = _sym_pairs(d)
        relations = ObstructionService.relation_space(N, split)
        if relations.is_zero:
            return Thm1Report(verdict=True, certificate='vacuous', kernel_dim=0, hull_dim=0)

        n11 = len(pairs) * d
        n12 = d * r * r

        def blocks(u):
            return _sym_block(d, d, u[:n11]), BlockMap(d, r, r, u[n11:])

        first_order, _ = _affine_system(n11 + n12, lambda u: _co_residual(data, *blocks(u)))
        cokernel = ExactLinearAlgebra.left_kernel(first_order)
        rows = list(first_order.row_list())
        for a, b in pairs:
            for k in range(r):
                star = BlockMap.from_function(
                    d, d, r, lambda x, y: unit_vector(r, k) if {x, y} == {a, b} else zero_vector(r)
                )

                def lhs(u, star=star):
                    f11, f12 = blocks(u)
                    out = []
                    for x, y, z in product(data.n1_units, repeat=3):
                        out.extend(_add(
                            star(f11(x, y), z),
                            f12(z, star(x, y)),
                            tuple(-c for c in f12(x, star(y, z))),
                            tuple(-c for c in star(x, f11(y, z))),
                        ))
                    return out

                matrix, _ = _affine_system(n11 + n12, lhs)
                for c in cokernel.basis:
                    row = combine(c, matrix.row_list(), n11 + n12)
                    if any(row):
                        rows.append(row)
        system = ExactMatrix.from_rows(rows, cols=n11 + n12)
        hull = ExactLinearAlgebra.rank_kernel(system).kernel

        def restrict(u):
            f11 = _sym_block(d, d, u[:n11])
            out = []
            for z in relations.basis:
                value = [Fraction(0)] * d
                for p, (a, b) in enumerate(pairs):
                    if z[p]:
                        value = [v + z[p] * w for v, w in zip(value, f11.basis_value(a, b))]
                out.extend(value)
            return tuple(out)

        restricted = ExactLinearAlgebra.image(hull, restrict, relations.dim * d).dim
        logger.info(f"thm1: dim Z {relations.dim}, hull dim {hull.dim}, restricted rank {restricted}")
        if restricted == 0:
            return Thm1Report(verdict=True, certificate='linear_hull', kernel_dim=relations.dim,
                              hull_dim=hull.dim)

        checked = 0
        for u in hull.basis:
            if checked >= witness_limit:
                break
            if not any(restrict(u)):
                continue
            checked += 1
            f11 = _sym_block(d, d, u[:n11])
            chain = ObstructionService.solve_chain(N, split, f11)
            if isinstance(chain, ChainInfeasible):
                continue
            if any(ObstructionService.check_ob2(N, split, chain)):
                continue
            if not ObstructionService.g22_commutativity_check(N, split, chain):
                continue
            logger.info("thm1: found a witness not vanishing on Z")
            return Thm1Report(verdict=False, certificate='witness', kernel_dim=relations.dim,
                              hull_dim=hull.dim, restricted_rank=restricted, witness=f11,
                              checked=checked)
        return Thm1Report(verdict=True, certificate='quadratic_screen', kernel_dim=relations.dim,
                          hull_dim=hull.dim, restricted_rank=restricted, checked=checked)

    @staticmethod
    def dim_identity_check(d: int, r: int) -> DimIdentityReport:
        """d(d(d+1)/2 - r) against d(d+1)(d+2)/6; equal exactly when r = (d^2-1)/3 (or d = 0)."""
        if d < 0 or r < 0:
            raise PreconditionError("d and r must be nonnegative")
        lhs = d * (d * (d + 1) // 2 - r)
        rhs = d * (d + 1) * (d + 2) // 6
        return DimIdentityReport(d=d, r=r, lhs=lhs, rhs=rhs)

    @staticmethod
    def known_regime(n: int, r: int) -> List[str]:
        """Which of the known ranges of r the pair (n, r) falls into, with d = n - r."""
        d = n - r
        if d < 1 or r < 1:
            raise PreconditionError(f"need 1 <= r < n, got n={n}, r={r}")
        labels = []
        if r in (1, 2) or 3 * r > d * d - 1:
            labels.append("line construction: A_(n,r) is not a component")
        if 3 <= r and 6 * r <= (d + 1) * (d + 2):
            labels.append("tangent equality known")
        if d % 4 == 0 and 16 * r == 5 * d * d - 8 * d:
            labels.append("divisible-by-4 case: tangent equality known")
        if 9 * r >= d * (d + 1) and r <= (d // 3) * (d - 3):
            labels.append("component if a suitable smooth point exists")
        if 3 * r == d * d - 1:
            labels.append("critical case r = (d^2-1)/3: tangent space too big")
        return labels or ["open"]

    @staticmethod
    def _corollary_violations(N: BilinearMap, split: Splitting, pairing: Sequence[Tuple[int, int]]) -> List[str]:
        d, r = split.d, split.r
        violations = []
        if not N.is_nilpotent3:
            violations.append("table is not degree-3 nilpotent")
        if d == 0 or d % 4:
            violations.append(f"d = {d} is not a positive multiple of 4")
        if 16 * r != 5 * d * d - 8 * d:
            violations.append(f"r = {r} differs from (5d^2 - 8d)/16 = {Fraction(5 * d * d - 8 * d, 16)}")
        data = _SplitData(N, split)
        seen = set()
        for u, v in pairing:
            if not (1 <= u <= d and 1 <= v <= d):
                violations.append(f"pair ({u}, {v}) is outside 1..{d}")
                continue
            seen.add(u)
            if u == v:
                violations.append(f"pair ({u}, {v}) repeats the generator")
            eu, ev = data.n1_units[u - 1], data.n1_units[v - 1]
            if any(data.mu(eu, eu)):
                violations.append(f"generator {u} has nonzero square")
            if any(data.mu(eu, ev)):
                violations.append(f"product of generators {u} and {v} is nonzero")
        for u in range(1, d + 1):
            if u not in seen:
                violations.append(f"generator {u} has no paired generator")
        return violations

    @staticmethod
    def corollary_report(N: BilinearMap, split: Splitting, pairing: Sequence[Tuple[int, int]]) -> CorollaryReport:
        """
        Impose f11(x, y) = f(x) y + f(y) x and the first obstruction
        equation at x = y = u, z = v for every pair (u, v).

        The right side vanishes since uu = uv = 0. An equation consisting
        of a single power c * f_a^k forces f_a = 0; forced variables are
        substituted until nothing changes.

        Raises:
            PreconditionError: Listing every violated hypothesis
        """
        violations = ObstructionService._corollary_violations(N, split, pairing)
        if violations:
            raise PreconditionError(violations)
        d = split.d
        f = [MultiPoly.variable(d, a) for a in range(d)]
        zero = MultiPoly.zero(d)

        def unit(a):
            return [MultiPoly.constant(d, 1) if b == a else zero for b in range(d)]

        def fval(x):
            total = zero
            for a, c in enumerate(x):
                if not c.is_zero:
                    total = total + c * f[a]
            return total

        def f11(x, y):
            fx, fy = fval(x), fval(y)
            return [fx * yb + fy * xb for xb, yb in zip(x, y)]

        equations: List[MultiPoly] = []
        for u, v in pairing:
            eu, ev = unit(u - 1), unit(v - 1)
            left = f11(f11(eu, eu), ev)
            right = f11(eu, f11(eu, ev))
            for a, b in zip(left, right):
                eq = a - b
                if not eq.is_zero and eq not in equations:
                    equations.append(eq)

        names = [f"f{a + 1}" for a in range(d)]
        texts = tuple(f"{eq.to_text(names)} = 0" for eq in equations)
        forced = set()
        changed = True
        while changed:
            changed = False
            for eq in equations:
                terms = list(eq.terms())
                if len(terms) != 1:
                    continue
                mono, _ = terms[0]
                support = [a for a, e in enumerate(mono) if e]
                if len(support) == 1 and support[0] not in forced:
                    forced.add(support[0])
                    changed = True
            if changed:
                equations = [MultiPoly(d, {m: c for m, c in eq.terms() if not any(m[a] for a in forced)})
                             for eq in equations]
                equations = [eq for eq in equations if not eq.is_zero]
        holds = len(forced) == d
        logger.info(f"corollary: forced {sorted(a + 1 for a in forced)} of {d}")
        return CorollaryReport(holds=holds, forced=tuple(sorted(a + 1 for a in forced)), equations=texts)

    @staticmethod
    def corollary_check(N: BilinearMap, split: Splitting, pairing: Sequence[Tuple[int, int]]) -> bool:
        return ObstructionService.corollary_report(N, split, pairing).holds
