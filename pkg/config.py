#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
config.py - Zentrale Konfiguration für h10cert

Lädt config.json, validiert, richtet Logging ein.
Stellt Getter-Funktionen für alle Module bereit.

Erstellt: 18.10.2026, 09:10
Modified: 18.10.2026, 11:40 - Sektionen kurven, sweep, toleranzen, kongruent, server
Modified: 18.10.2026, 13:05 - H10_CONFIG Umgebungsvariable, reload() für Tests
Modified: 19.10.2026, 09:15 - Log-Level ERROR
"""

import json
import logging
import os

# =============================================================================
# TRACE-Level (unter DEBUG)
# =============================================================================
TRACE = 5
logging.addLevelName(TRACE, "TRACE")

def _trace(self, message, *args, **kwargs):
    if self.isEnabledFor(TRACE):
        self._log(TRACE, message, args, **kwargs)

logging.Logger.trace = _trace

# =============================================================================
# Modul-Variablen
# =============================================================================
_config = {}
_startup_errors = []
_config_valid = False
_config_path = None

_LEVEL_MAP = {
    "TRACE": TRACE,
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR
}

# Fallbacks wenn config.json fehlt oder ungültig ist
_DEFAULT_SWEEP = {
    "standard_limit": 100000,
    "max_limit": 1000000,
    "worker": 1,
    "chunk_groesse": 2000,
    "cache_aktiv": False,
    "cache_datei": "sweep_cache.json"
}
_DEFAULT_TOLERANZEN = {"p_set": 0.03, "q_set": 0.02}
_DEFAULT_KONGRUENT = {"max_zaehler": 10000, "max_nenner": 100}

# =============================================================================
# Interne Hilfsfunktionen
# =============================================================================

def _get_script_dir():
    """Verzeichnis dieses Skripts."""
    return os.path.dirname(os.path.abspath(__file__))

def _get_config_path():
    """Ermittelt Pfad zu config.json (H10_CONFIG hat Vorrang)."""
    env_path = os.environ.get("H10_CONFIG")
    if env_path:
        return env_path
    return os.path.join(_get_script_dir(), "config.json")

def _resolve_path(path):
    """Relative Pfade gelten relativ zum Skript-Verzeichnis."""
    if os.path.isabs(path):
        return path
    return os.path.join(_get_script_dir(), path)

def _add_error(message):
    """Fügt Fehler zur Liste hinzu."""
    _startup_errors.append(message)

def _validate_required_section(section_name):
    """Prüft ob Sektion existiert."""
    if section_name not in _config:
        _add_error(f"Sektion '{section_name}' fehlt")
        return False
    return True

def _validate_required_field(section, field_name, field_type, section_name):
    """Prüft ob Feld existiert und korrekten Typ hat."""
    if field_name not in section:
        _add_error(f"{section_name}.{field_name} fehlt")
        return False

    value = section[field_name]

    if field_type == "numeric":
        # bool ist in Python ein int, hier aber kein gültiger Zahlenwert
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            _add_error(f"{section_name}.{field_name} muss eine Zahl sein (ist: {type(value).__name__})")
            return False
    elif field_type == "string":
        if not isinstance(value, str):
            _add_error(f"{section_name}.{field_name} muss ein String sein")
            return False
    elif field_type == "bool":
        if not isinstance(value, bool):
            _add_error(f"{section_name}.{field_name} muss true/false sein")
            return False
    elif field_type == "list":
        if not isinstance(value, list):
            _add_error(f"{section_name}.{field_name} muss eine Liste sein")
            return False

    return True

def _validate_positive(section, field_name, section_name):
    """Prüft ob numerisches Feld > 0 ist (nur wenn vorhanden und Zahl)."""
    value = section.get(field_name)
    if isinstance(value, (int, float)) and not isinstance(value, bool) and value <= 0:
        _add_error(f"{section_name}.{field_name} muss > 0 sein (ist: {value})")

def _validate_system():
    """Validiert system Sektion."""
    if not _validate_required_section("system"):
        return

    section = _config["system"]
    _validate_required_field(section, "name", "string", "system")
    _validate_required_field(section, "version", "string", "system")

def _validate_logging():
    """Validiert logging Sektion."""
    if not _validate_required_section("logging"):
        return

    section = _config["logging"]
    if _validate_required_field(section, "level", "string", "logging"):
        if section["level"].upper() not in _LEVEL_MAP:
            _add_error(f"logging.level unbekannt: {section['level']}")

def _validate_kurven():
    """Validiert kurven Sektion."""
    if not _validate_required_section("kurven"):
        return

    section = _config["kurven"]
    _validate_required_field(section, "datenbank", "string", "kurven")

def _validate_sweep():
    """Validiert sweep Sektion."""
    if not _validate_required_section("sweep"):
        return

    section = _config["sweep"]
    for field_name in ("standard_limit", "max_limit", "worker", "chunk_groesse"):
        if _validate_required_field(section, field_name, "numeric", "sweep"):
            _validate_positive(section, field_name, "sweep")
    _validate_required_field(section, "cache_aktiv", "bool", "sweep")
    _validate_required_field(section, "cache_datei", "string", "sweep")

    limit = section.get("standard_limit")
    max_limit = section.get("max_limit")
    if isinstance(limit, int) and isinstance(max_limit, int) and limit > max_limit:
        _add_error(f"sweep.standard_limit ({limit}) > sweep.max_limit ({max_limit})")

def _validate_toleranzen():
    """Validiert toleranzen Sektion."""
    if not _validate_required_section("toleranzen"):
        return

    section = _config["toleranzen"]
    for field_name in ("p_set", "q_set"):
        if _validate_required_field(section, field_name, "numeric", "toleranzen"):
            _validate_positive(section, field_name, "toleranzen")

def _validate_kongruent():
    """Validiert kongruent Sektion."""
    if not _validate_required_section("kongruent"):
        return

    section = _config["kongruent"]
    for field_name in ("max_zaehler", "max_nenner"):
        if _validate_required_field(section, field_name, "numeric", "kongruent"):
            _validate_positive(section, field_name, "kongruent")

def _validate_server():
    """Validiert server Sektion."""
    if not _validate_required_section("server"):
        return

    section = _config["server"]
    _validate_required_field(section, "port", "numeric", "server")

def _setup_logging():
    """Richtet Logging basierend auf config ein."""
    level_str = _config.get("logging", {}).get("level", "INFO").upper()
    level = _LEVEL_MAP.get(level_str, logging.INFO)

    # Root-Logger konfigurieren
    logging.basicConfig(
        level=level,
        format='[%(levelname)-5s] %(asctime)s %(name)s: %(message)s',
        datefmt='%H:%M:%S'
    )
    logging.getLogger().setLevel(level)
    logging.getLogger('werkzeug').setLevel(logging.WARNING)
    # Logger für dieses Modul
    logger = logging.getLogger(__name__)
    logger.debug(f"Logging initialisiert auf Level: {level_str}")

def _reset():
    """Setzt Modul-Zustand zurück (vor erneutem Laden)."""
    global _config, _config_valid, _config_path
    _config = {}
    _config_valid = False
    _config_path = None
    del _startup_errors[:]

def _load_config(path=None):
    """Lädt und validiert config.json."""
    global _config, _config_valid, _config_path

    _config_path = path or _get_config_path()

    # Datei existiert?
    if not os.path.exists(_config_path):
        _add_error(f"config.json nicht gefunden: {_config_path}")
        return

    # JSON laden
    try:
        with open(_config_path, 'r', encoding='utf-8') as f:
            _config = json.load(f)
    except json.JSONDecodeError as e:
        _add_error(f"JSON-Syntaxfehler in config.json: Zeile {e.lineno}, {e.msg}")
        return
    except Exception as e:
        _add_error(f"Fehler beim Lesen von config.json: {e}")
        return

    if not isinstance(_config, dict):
        _add_error("config.json muss ein Objekt enthalten")
        _config = {}
        return

    # Logging zuerst einrichten (auch bei Config-Fehlern nützlich)
    _setup_logging()

    # Validierungen
    _validate_system()
    _validate_logging()
    _validate_kurven()
    _validate_sweep()
    _validate_toleranzen()
    _validate_kongruent()
    _validate_server()

    # Ergebnis
    if not _startup_errors:
        _config_valid = True
        logger = logging.getLogger(__name__)
        logger.debug("Konfiguration erfolgreich geladen")

# =============================================================================
# Öffentliche API
# =============================================================================

def reload(path=None):
    """
    Lädt die Konfiguration neu.

    Args:
        path: Alternativer Pfad zu einer config.json (None = Standard)

    Returns:
        True wenn die neue Config gültig ist
    """
    _reset()
    _load_config(path)
    return _config_valid

def get_startup_errors():
    """Gibt Liste der Config-Fehler zurück (leer wenn OK)."""
    return _startup_errors.copy()

def is_valid():
    """True wenn Config fehlerfrei geladen."""
    return _config_valid

def get_config_path():
    """Gibt Pfad zur config.json zurück."""
    return _config_path

# --- System ---

def get_system_info():
    """Gibt system Sektion zurück."""
    if not _config_valid:
        return {"name": "h10cert", "version": "?"}
    return _config.get("system", {}).copy()

# --- Kurven-Datenbank ---

def get_curve_db_path():
    """Gibt absoluten Pfad zur Kurven-Datenbank zurück."""
    if not _config_valid:
        return _resolve_path("curves.json")
    return _resolve_path(_config.get("kurven", {}).get("datenbank", "curves.json"))

# --- Sweep ---

def get_sweep_config():
    """Gibt sweep Konfiguration zurück (Cache-Pfad absolut)."""
    if not _config_valid:
        section = _DEFAULT_SWEEP.copy()
    else:
        section = _DEFAULT_SWEEP.copy()
        section.update(_config.get("sweep", {}))
    section["cache_datei"] = _resolve_path(section["cache_datei"])
    return section

def get_sweep_limit():
    """Standard-Limit X für Sweeps."""
    return get_sweep_config()["standard_limit"]

def get_max_limit():
    """Obergrenze für X in Sweep-Reports."""
    return get_sweep_config()["max_limit"]

# --- Toleranzen ---

def get_toleranzen():
    """Gibt Abweichungs-Toleranzen für P- und Q-Mengen zurück."""
    if not _config_valid:
        return _DEFAULT_TOLERANZEN.copy()
    return _config.get("toleranzen", _DEFAULT_TOLERANZEN).copy()

# --- Kongruente Zahlen ---

def get_kongruent_config():
    """Gibt Suchgrenzen für kongruente Zahlen zurück."""
    if not _config_valid:
        return _DEFAULT_KONGRUENT.copy()
    return _config.get("kongruent", _DEFAULT_KONGRUENT).copy()

# --- Server ---

def get_server_port():
    """Gibt Server-Port zurück (default 5000)."""
    if not _config_valid:
        return 5000
    return _config.get("server", {}).get("port", 5000)

# --- Logging ---

def get_log_level():
    """Gibt konfiguriertes Log-Level zurück."""
    return _config.get("logging", {}).get("level", "INFO").upper()

def set_log_level(level_str):
    """
    Überschreibt das Log-Level zur Laufzeit (CLI --log-level).

    Returns:
        True wenn Level bekannt war
    """
    level = _LEVEL_MAP.get(str(level_str).upper())
    if level is None:
        return False
    logging.getLogger().setLevel(level)
    return True

def get_logger(name):
    """Erzeugt Logger mit TRACE-Unterstützung."""
    return logging.getLogger(name)

# =============================================================================
# Initialisierung beim Import
# =============================================================================
_load_config()
