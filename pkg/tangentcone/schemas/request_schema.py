from marshmallow import RAISE, Schema, fields, validate, ValidationError

from tangentcone.utils.constants import SCHEME_KINDS
from tangentcone.utils.validators import ValidationUtils


class VectorField(fields.Field):
    """Comma-separated rationals, e.g. '1,-1/2,0'"""

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, str):
            raise ValidationError('vector must be given as comma-separated rationals')
        return ValidationUtils.parse_vector(value, ',')


class PairsField(fields.Field):
    """Generator pairs, e.g. '1:2,2:1,3:4,4:3'"""

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, str):
            raise ValidationError('pairs must be given as u:v,u:v,...')
        return ValidationUtils.parse_pairs(value)


class CommandRequestSchema(Schema):
    """Base schema: unknown flags are rejected before any computation"""

    class Meta:
        unknown = RAISE


class ImultRequestSchema(CommandRequestSchema):
    ideal = fields.Str(required=True)
    curve = fields.Str(required=True)
    trunc = fields.Int(load_default=None, validate=validate.Range(min=0))


class TspaceRequestSchema(CommandRequestSchema):
    ideal = fields.Str(required=True)


class ConetestRequestSchema(CommandRequestSchema):
    ideal = fields.Str(required=True)
    v = VectorField(required=True)


class Curve3RequestSchema(CommandRequestSchema):
    ideal = fields.Str(required=True)
    v = VectorField(required=True)
    trunc = fields.Int(load_default=None, validate=validate.Range(min=2))
    emit = fields.Str(load_default=None)


class LowestformRequestSchema(CommandRequestSchema):
    ideal = fields.Str(required=True)


class SchemeGenRequestSchema(CommandRequestSchema):
    n = fields.Int(required=True, validate=validate.Range(min=1))
    kind = fields.Str(load_default='assoc', validate=validate.OneOf(sorted(SCHEME_KINDS)))
    emit = fields.Str(load_default=None)


class SchemeTangentRequestSchema(CommandRequestSchema):
    algebra = fields.Str(required=True)
    kind = fields.Str(load_default='assoc', validate=validate.OneOf(sorted(SCHEME_KINDS)))


class SpacesRequestSchema(CommandRequestSchema):
    algebra = fields.Str(required=True)
    emit = fields.Str(load_default=None)


class ChainRequestSchema(CommandRequestSchema):
    algebra = fields.Str(required=True)
    f11 = fields.Str(required=True)
    emit = fields.Str(load_default=None)


class ObstructRequestSchema(CommandRequestSchema):
    algebra = fields.Str(required=True)
    circ = fields.Str(required=True)
    linearized = fields.Bool(load_default=False)


class Thm1RequestSchema(CommandRequestSchema):
    algebra = fields.Str(required=True)
    witness_limit = fields.Int(load_default=None, validate=validate.Range(min=0))


class DimcheckRequestSchema(CommandRequestSchema):
    d = fields.Int(required=True, validate=validate.Range(min=0))
    r = fields.Int(required=True, validate=validate.Range(min=0))


class CorollaryRequestSchema(CommandRequestSchema):
    algebra = fields.Str(required=True)
    pairs = PairsField(required=True)


REQUEST_SCHEMAS = {
    'imult': ImultRequestSchema,
    'tspace': TspaceRequestSchema,
    'conetest': ConetestRequestSchema,
    'curve3': Curve3RequestSchema,
    'lowestform': LowestformRequestSchema,
    'scheme-gen': SchemeGenRequestSchema,
    'scheme-tangent': SchemeTangentRequestSchema,
    'spaces': SpacesRequestSchema,
    'chain': ChainRequestSchema,
    'obstruct': ObstructRequestSchema,
    'thm1': Thm1RequestSchema,
    'dimcheck': DimcheckRequestSchema,
    'corollary': CorollaryRequestSchema,
}

FILE_FLAGS = ('ideal', 'curve', 'algebra', 'f11', 'circ')
