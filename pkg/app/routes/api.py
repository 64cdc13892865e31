"""
JSON API over the enumerators and the oracle.

Both endpoints accept ``edges`` either as edge-list text or as a list of
``[u, v, sign]`` triples, plus ``k`` and ``t``.
"""
from flask import Blueprint, request, jsonify, current_app
import logging

from app.antiplex.core.exceptions import ParameterError, PlexError
from app.antiplex.enumeration import format_plex
from app.antiplex.graph import load_signed_edge_list
from app.antiplex.models import Algorithm, OutputMode, Params
from app.antiplex.runner import run_enumeration, run_oracle

logger = logging.getLogger("antiplex.api")

bp = Blueprint('api', __name__, url_prefix='/api')


def _graph_from(data):
    edges = data.get('edges')
    if isinstance(edges, str):
        text = edges
    elif isinstance(edges, list):
        try:
            text = "\n".join(f"{u} {v} {s}" for u, v, s in edges)
        except (TypeError, ValueError) as e:
            raise ParameterError("edges must be [u, v, sign] triples") from e
    else:
        raise ParameterError("edges is required (edge-list text or a list of [u, v, sign])")
    return load_signed_edge_list(text)


def _params_from(data):
    try:
        return Params.of(int(data['k']), int(data['t']))
    except KeyError as e:
        raise ParameterError(f"{e.args[0]} is required") from e
    except (TypeError, ValueError) as e:
        raise ParameterError("k and t must be integers") from e


def _timeout_from(data):
    value = data.get('timeout')
    if value is None:
        return None
    try:
        seconds = float(value)
    except (TypeError, ValueError) as e:
        raise ParameterError('timeout must be a number of seconds') from e
    if seconds <= 0:
        raise ParameterError('timeout must be positive')
    return seconds


def _choice(enum_cls, value, default):
    try:
        return enum_cls(value or default)
    except ValueError as e:
        allowed = ", ".join(m.value for m in enum_cls)
        raise ParameterError(f"unknown value {value!r} (expected one of {allowed})") from e


@bp.route('/enumerate', methods=['POST'])
def enumerate_plexes():
    data = request.get_json(silent=True) or {}
    try:
        params = _params_from(data)
        g, load_report = _graph_from(data)
        algo = _choice(Algorithm, data.get('algo'), Algorithm.SAPE.value)
        mode = _choice(OutputMode, data.get('mode'), OutputMode.LIST.value)
        if mode is OutputMode.STREAM:
            raise ParameterError("stream mode is only available on the command line")
        outcome = run_enumeration(
            g,
            params,
            algo,
            mode=mode,
            workers=1,
            timeout=_timeout_from(data),
            config=current_app.config['ANTIPLEX_CONFIG'],
        )
    except PlexError as e:
        logger.warning(f"Enumeration request rejected: {e}")
        return jsonify({'success': False, 'error': str(e)}), 400
    except Exception as e:
        logger.error(f"Error enumerating: {e}")
        return jsonify({'success': False, 'error': f"Error: {str(e)}"}), 500

    response = {
        'success': True,
        'stats': outcome.stats.model_dump(mode='json', exclude_none=True),
        'load': load_report.model_dump(),
    }
    if mode is OutputMode.COUNT:
        response['count'] = outcome.stats.results
    else:
        response['results'] = outcome.lines(g.labels)
    return jsonify(response)


@bp.route('/oracle', methods=['POST'])
def oracle():
    data = request.get_json(silent=True) or {}
    try:
        params = _params_from(data)
        g, _ = _graph_from(data)
        results = run_oracle(g, params, current_app.config['ANTIPLEX_CONFIG'])
    except PlexError as e:
        logger.warning(f"Oracle request rejected: {e}")
        return jsonify({'success': False, 'error': str(e)}), 400
    except Exception as e:
        logger.error(f"Error in oracle: {e}")
        return jsonify({'success': False, 'error': f"Error: {str(e)}"}), 500

    return jsonify({
        'success': True,
        'results': sorted(format_plex(p, g.labels) for p in results),
    })
