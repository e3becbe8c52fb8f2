#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
h10_server.py - h10cert Flask-Server

JSON-API über dieselben Funktionen wie die Kommandozeile:
Dichte-Tabelle, Kurven-Einträge, Zugehörigkeit zu P und Zertifikate.
Sweeps laufen nur über die Kommandozeile.

Erstellt: 18.10.2026, 22:45
"""

from flask import Flask, jsonify, request

import config
import curve_db
import h10_certificate
from arith import ArithError
from chebotarev import SieveError, in_P, in_P_gfp
from curve_db import CurveDBError
from ec_model import CurveError
from h10_certificate import CertificateError
from selmer_brau import SelmerError

# =============================================================================
# Flask App Setup
# =============================================================================

app = Flask(__name__)

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Fehlerbehandlung
# =============================================================================

# Eingabefehler, Antwort 400
_INPUT_ERRORS = (CertificateError, SieveError, SelmerError, CurveError, ArithError)


def _error(message, status=400):
    logger.warning(f"API-Fehler: {message}")
    return jsonify({'success': False, 'error': message}), status


def _int_arg(data, name, required=True):
    """Ganzzahliger Parameter aus Query oder JSON-Body."""
    value = data.get(name)
    if value is None:
        if required:
            raise CertificateError(f"Parameter {name} fehlt")
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise CertificateError(f"Parameter {name} ist keine ganze Zahl: {value}")

# =============================================================================
# API Routes
# =============================================================================

@app.route('/api/status')
def api_status():
    """Systeminfo und Config-Status."""
    return jsonify({
        'success': config.is_valid(),
        'system': config.get_system_info(),
        'errors': config.get_startup_errors(),
        'datenbank': curve_db.current_path()
    })


@app.route('/api/densities')
def api_densities():
    """Dichte-Tabelle der P_n für n = 1..7."""
    rows = h10_certificate.emit_density_table()
    return jsonify({'success': True,
                    'rows': [{'n': r.n, 'density': str(r.value), 'decimal': r.decimal,
                              'method': r.method} for r in rows]})


@app.route('/api/kurven/<label>')
def api_kurve(label):
    """Datenbank-Eintrag zu label."""
    try:
        rec = curve_db.get(label)
    except CurveDBError as e:
        return _error(str(e), 404)
    return jsonify({'success': True, 'kurve': rec.to_dict()})


@app.route('/api/member')
def api_member():
    """p in P(E,3) für ?kurve=...&p=..."""
    label = request.args.get('kurve')
    try:
        p = _int_arg(request.args, 'p')
        rec = curve_db.get(label)
        member, member_gfp = in_P(rec, p), in_P_gfp(rec, p)
    except CurveDBError as e:
        return _error(str(e), 404)
    except _INPUT_ERRORS as e:
        return _error(str(e))
    return jsonify({'success': True, 'curve': rec.label, 'p': p,
                    'in_P': member, 'in_P_gfp': member_gfp})


@app.route('/api/certify')
def api_certify():
    """Zertifikat für ?family=..&p=..&q=..[&D=..][&witness=x,y][&assume_congruent=1]."""
    data = request.args
    assume = data.get('assume_congruent', '').lower() in ('1', 'true', 'ja')
    try:
        cert = h10_certificate.certify(data.get('family'), _int_arg(data, 'p'),
                                       _int_arg(data, 'q'), _int_arg(data, 'D', required=False),
                                       witness=data.get('witness'), assume_congruent=assume)
    except _INPUT_ERRORS + (CurveDBError,) as e:
        return _error(str(e))
    return jsonify({'success': True, 'certificate': cert.to_dict()})

# =============================================================================
# Main
# =============================================================================

def main():
    """Startet den Server."""
    logger.info("h10cert Server startet...")

    if not config.is_valid():
        logger.error("Config ungültig! Server startet trotzdem (Status unter /api/status).")
        for error in config.get_startup_errors():
            logger.error(f"  - {error}")
    else:
        logger.info("Config OK")

    port = config.get_server_port()
    logger.info(f"Server läuft auf Port {port}")

    app.run(host='0.0.0.0', port=port, debug=False)

if __name__ == '__main__':
    main()
