import json
import math

import pytest

from relentbound.cli import Column, Kind, Table, render
from relentbound.cli.output import convert, format_float

TABLES = [
    Table('first', [Column('d'), Column('value', Kind.ENTROPY),
                    Column('var', Kind.VARIANCE), Column('flag')],
          [(2, math.log(2), math.log(2) ** 2, True),
           (3, math.inf, 0.5, False)]),
    Table('second', [Column('name'), Column('note')], [('x', None)]),
]


class TestFormat:
    def test_float(self):
        assert format_float(1 / 3) == '0.333333333333'
        assert format_float(2.0) == '2'
        assert format_float(1e-20) == '1e-20'

    def test_special(self):
        assert format_float(math.inf) == 'inf'
        assert format_float(-math.inf) == '-inf'
        assert format_float(math.nan) == 'nan'

    def test_convert(self):
        assert convert(math.log(2), Kind.ENTROPY, 'bits') == pytest.approx(1)
        assert convert(math.log(2) ** 2, Kind.VARIANCE,
                       'bits') == pytest.approx(1)
        assert convert(0.5, Kind.PLAIN, 'bits') == 0.5
        assert convert(0.5, Kind.ENTROPY, 'nats') == 0.5
        assert convert(3, Kind.ENTROPY, 'bits') == 3
        with pytest.raises(ValueError):
            convert(0.5, Kind.PLAIN, 'bans')


class TestRender:
    def test_json(self):
        data = json.loads(render(TABLES, 'json', 'bits'))
        assert data['units'] == 'bits'
        assert data['first'][0] == {'d': 2, 'value': 1.0, 'var': 1.0,
                                    'flag': True}
        assert data['first'][1]['value'] == 'inf'
        assert data['first'][1]['var'] == pytest.approx(0.5 / math.log(2) ** 2)
        assert data['second'] == [{'name': 'x', 'note': None}]

    def test_csv(self):
        text = render(TABLES, 'csv', 'nats')
        assert text == (
            'd,value,var,flag\n'
            '2,0.69314718056,0.480453013918,true\n'
            '3,inf,0.5,false\n'
            '\n'
            'name,note\n'
            'x,\n'
        )

    def test_unknown(self):
        with pytest.raises(ValueError):
            render(TABLES, 'xml', 'nats')
