from marshmallow import Schema, fields, validate, ValidationError, post_load

from tangentcone.models.ideal import IdealPresentation
from tangentcone.models.jet import CurveGerm, Jet
from tangentcone.schemas.base import load_records, read_records
from tangentcone.services.symbolic_service import SymbolicService
from tangentcone.utils.constants import CURVE_VARIABLE, VARIABLE_PREFIX
from tangentcone.utils.exceptions import ParseError
from tangentcone.utils.helpers import format_scalar
from tangentcone.utils.validators import ValidationUtils


def variable_names(n):
    return [f"{VARIABLE_PREFIX}{i + 1}" for i in range(n)]


class IdealFileSchema(Schema):
    """Schema for ideal files: 'vars n', 'gen <polynomial>' lines, optional 'point'"""
    vars = fields.Int(required=True, validate=validate.Range(min=1))
    gen = fields.List(fields.Str(), required=True,
                      validate=validate.Length(min=1, error='at least one gen line is required'))
    point = fields.Str(load_default=None)

    @post_load
    def make_ideal(self, data, **kwargs):
        n = data['vars']
        names = variable_names(n)
        generators = []
        for index, text in enumerate(data['gen']):
            try:
                generators.append(SymbolicService.parse_polynomial(text, names))
            except ParseError as e:
                raise ValidationError({'gen': {index: [str(e)]}})
        point = None
        if data.get('point') is not None:
            try:
                point = [ValidationUtils.parse_rational(t) for t in data['point'].split()]
            except ValidationError as e:
                raise ValidationError({'point': e.messages})
            if len(point) != n:
                raise ValidationError({'point': [f"point has {len(point)} coordinates, expected {n}"]})
        return IdealPresentation(n, generators, point)


class CurveFileSchema(Schema):
    """Schema for curve files: 'trunc D' and one 'comp <polynomial in t>' per coordinate"""
    trunc = fields.Int(required=True, validate=validate.Range(min=0))
    comp = fields.List(fields.Str(), required=True,
                       validate=validate.Length(min=1, error='at least one comp line is required'))

    @post_load
    def make_curve(self, data, **kwargs):
        D = data['trunc']
        components = []
        for index, text in enumerate(data['comp']):
            try:
                poly = SymbolicService.parse_polynomial(text, [CURVE_VARIABLE])
            except ParseError as e:
                raise ValidationError({'comp': {index: [str(e)]}})
            if poly.degree > D:
                raise ValidationError({'comp': {index: [f"degree {poly.degree} exceeds truncation {D}"]}})
            components.append(Jet.from_polynomial(poly, D))
        return CurveGerm(components)


def load_ideal(text: str, source: str = '<ideal>') -> IdealPresentation:
    records = read_records(text, source, single=('vars', 'point'), repeated=('gen',))
    return load_records(IdealFileSchema(), records, source)


def load_curve(text: str, source: str = '<curve>') -> CurveGerm:
    records = read_records(text, source, single=('trunc',), repeated=('comp',))
    return load_records(CurveFileSchema(), records, source)


def dump_ideal(ideal: IdealPresentation) -> str:
    names = variable_names(ideal.nvars)
    lines = [f"vars {ideal.nvars}"]
    lines += [f"gen {g.to_text(names)}" for g in ideal.generators]
    lines.append("point " + ' '.join(format_scalar(x) for x in ideal.base_point))
    return '\n'.join(lines) + '\n'


def dump_curve(germ: CurveGerm) -> str:
    lines = [f"trunc {germ.trunc}"]
    lines += [f"comp {c.to_text()}" for c in germ.components]
    return '\n'.join(lines) + '\n'
