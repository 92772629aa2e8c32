from marshmallow import Schema, fields, validate, ValidationError, post_load

from tangentcone.models.algebra import AlgebraPoint, BilinearMap
from tangentcone.schemas.base import load_records, read_records
from tangentcone.utils.helpers import format_scalar
from tangentcone.utils.validators import ValidationUtils


def _parse_products(lines, n, field_name):
    """Turn 'i j : a1 ... an' lines into {(i, j): vector}, applying symmetry."""
    products = {}
    for index, text in enumerate(lines):
        head, sep, tail = text.partition(':')
        if not sep:
            raise ValidationError({field_name: {index: ["expected 'i j : a1 ... an'"]}})
        try:
            indices = head.split()
            if len(indices) != 2:
                raise ValidationError("expected two basis indices before ':'")
            i = ValidationUtils.parse_index(indices[0], 1, n, 'basis index') - 1
            j = ValidationUtils.parse_index(indices[1], 1, n, 'basis index') - 1
            values = tuple(ValidationUtils.parse_rational(t) for t in tail.split())
        except ValidationError as e:
            raise ValidationError({field_name: {index: e.messages}})
        if len(values) != n:
            raise ValidationError({field_name: {index: [f"product has {len(values)} coordinates, expected {n}"]}})
        for key in ((i, j), (j, i)):
            if key in products and products[key] != values:
                raise ValidationError({field_name: {index: [
                    f"conflicting values for e{i + 1}e{j + 1}"]}})
            products[key] = values
    return products


class AlgebraFileSchema(Schema):
    """Schema for multiplication tables: 'dim n' and 'prod i j : a1 ... an' lines"""
    dim = fields.Int(required=True, validate=validate.Range(min=1))
    prod = fields.List(fields.Str(), load_default=list)

    @post_load
    def make_algebra(self, data, **kwargs):
        n = data['dim']
        products = _parse_products(data['prod'], n, 'prod')
        return AlgebraPoint.from_map(BilinearMap.from_products(n, products, symmetric=False))


class MapFileSchema(Schema):
    """Schema for symmetric bilinear maps: header 'map n', then 'prod' lines"""
    map = fields.Int(required=True, validate=validate.Range(min=1))
    prod = fields.List(fields.Str(), load_default=list)

    @post_load
    def make_map(self, data, **kwargs):
        n = data['map']
        products = _parse_products(data['prod'], n, 'prod')
        return BilinearMap.from_products(n, products, symmetric=False)


def load_algebra(text: str, source: str = '<algebra>') -> AlgebraPoint:
    records = read_records(text, source, single=('dim',), repeated=('prod',))
    return load_records(AlgebraFileSchema(), records, source)


def load_map(text: str, source: str = '<map>') -> BilinearMap:
    records = read_records(text, source, single=('map',), repeated=('prod',))
    return load_records(MapFileSchema(), records, source)


def _dump_products(m: BilinearMap):
    lines = []
    for i in range(m.n):
        for j in range(i, m.n):
            value = m.basis_product(i, j)
            if any(value):
                lines.append(f"prod {i + 1} {j + 1} : " + ' '.join(format_scalar(c) for c in value))
    return lines


def dump_algebra(N: BilinearMap) -> str:
    return '\n'.join([f"dim {N.n}"] + _dump_products(N)) + '\n'


def dump_map(m: BilinearMap) -> str:
    return '\n'.join([f"map {m.n}"] + _dump_products(m)) + '\n'
