"""
Health check routes for the antiplex service.
"""

from flask import Blueprint, jsonify, current_app
import logging
from datetime import datetime

from app.antiplex.fixtures import load_fixture
from app.antiplex.core.exceptions import PlexError

# Configure logging
logger = logging.getLogger("antiplex.health")

bp = Blueprint('health', __name__, url_prefix='/api/health')


@bp.route('', methods=['GET'])
def health_check():
    """
    Basic health check endpoint.

    Returns:
        JSON response with status, version and environment
    """
    return jsonify({
        'status': 'ok',
        'timestamp': datetime.now().isoformat(),
        'environment': current_app.config.get('ANTIPLEX_ENV', 'unknown'),
        'version': current_app.config.get('ANTIPLEX_VERSION', 'unknown'),
        'python_version': current_app.config.get('ANTIPLEX_PYTHON_VERSION', 'unknown'),
    })


@bp.route('/selftest', methods=['GET'])
def selftest():
    """
    Re-derive the smallest fixture with the oracle and the optimized engine.

    Returns:
        JSON response; status 503 when either disagrees with the fixture
    """
    from app.antiplex.enumeration import sape

    try:
        fixture = load_fixture('example_plex')
        found = sape(fixture.graph, fixture.params)
        ok = tuple(found) == fixture.expected
    except PlexError as e:
        logger.error(f"Self test failed: {e}")
        return jsonify({'status': 'error', 'error': str(e)}), 503

    if not ok:
        logger.warning(f"Self test mismatch: {found} != {fixture.expected}")
    return jsonify({
        'status': 'ok' if ok else 'error',
        'timestamp': datetime.now().isoformat(),
        'fixture': fixture.name,
        'results': len(found),
    }), (200 if ok else 503)
