#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
sweep_cache.py - Persistenter Cache für Dichte-Sweeps von h10cert

Speichert Ergebnisse von empirical_density in sweep_cache.json,
Schlüssel (Kurve, Modell, Prädikat, X). Das Modell sind die
a-Invarianten aller beteiligten Kurven; ändert sich ein Modell in
curves.json, trifft der alte Eintrag nicht mehr. Der Cache ist nur beratend:
Lese- und Schreibfehler werden geloggt, der Sweep läuft trotzdem.

Ein Eintrag beschreibt sich selbst:
    {"schema_version": 2, "kurve": "557b1", "modell": "0,-1,1,-268,1781",
     "praedikat": "P_set(557b1,3)", "X": 100000, "treffer": 5401, "gescannt": 9592}

Erstellt: 18.10.2026, 16:50
Modified: 19.10.2026, 09:45 - Modell (a-Invarianten) im Schlüssel, Schema 2
"""

import json
import os
import threading

import config

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

CACHE_SCHEMA_VERSION = 2

_ENTRY_FIELDS = ("schema_version", "kurve", "modell", "praedikat", "X", "treffer", "gescannt")

_cache_lock = threading.Lock()

# =============================================================================
# Interne Funktionen
# =============================================================================

def _cache_path():
    return config.get_sweep_config()["cache_datei"]


def _valid_entry(entry):
    """True wenn entry alle Felder mit passendem Typ hat."""
    if not isinstance(entry, dict) or set(entry) != set(_ENTRY_FIELDS):
        return False
    if entry["schema_version"] != CACHE_SCHEMA_VERSION:
        return False
    return (isinstance(entry["modell"], str) and isinstance(entry["X"], int)
            and isinstance(entry["treffer"], int) and isinstance(entry["gescannt"], int)
            and 0 <= entry["treffer"] <= entry["gescannt"])


def _matches(entry, kurve, modell, praedikat, X):
    key = (entry["kurve"], entry["modell"], entry["praedikat"], entry["X"])
    return key == (kurve, modell, praedikat, X)


def _load_full_cache():
    """
    Lädt alle Einträge aus der Cache-Datei.
    Defekte Datei oder defekte Einträge gelten als leer.

    Returns:
        Liste von Dicts
    """
    path = _cache_path()
    if not os.path.exists(path):
        return []

    try:
        with open(path, 'r', encoding='utf-8') as f:
            entries = json.load(f)
    except Exception as e:
        logger.warning(f"Fehler beim Laden von {os.path.basename(path)}: {e}")
        return []

    if not isinstance(entries, list):
        logger.warning(f"{os.path.basename(path)} enthält keine Liste, wird ignoriert")
        return []

    valid = [e for e in entries if _valid_entry(e)]
    if len(valid) != len(entries):
        logger.warning(f"{len(entries) - len(valid)} ungültige Cache-Einträge verworfen")
    return valid


def _save_full_cache(entries):
    """
    Speichert alle Einträge in die Cache-Datei.

    Args:
        entries: Liste von Dicts
    """
    path = _cache_path()
    try:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(entries, f, indent=2, sort_keys=True)
        logger.debug(f"Sweep-Cache gespeichert: {len(entries)} Einträge")
    except Exception as e:
        logger.error(f"Fehler beim Speichern von {os.path.basename(path)}: {e}")

# =============================================================================
# Öffentliche API
# =============================================================================

def is_active():
    """True wenn der Cache in config.json eingeschaltet ist."""
    return bool(config.get_sweep_config().get("cache_aktiv", False))


def lookup(kurve, modell, praedikat, X):
    """
    Sucht ein gespeichertes Ergebnis.

    Returns:
        (treffer, gescannt) oder None
    """
    if not is_active():
        return None
    with _cache_lock:
        for entry in _load_full_cache():
            if _matches(entry, kurve, modell, praedikat, X):
                logger.debug(f"Cache-Treffer: {praedikat}, X={X}")
                return entry["treffer"], entry["gescannt"]
    return None


def store(kurve, modell, praedikat, X, treffer, gescannt):
    """Speichert oder ersetzt das Ergebnis für (kurve, modell, praedikat, X)."""
    if not is_active():
        return
    with _cache_lock:
        entries = [e for e in _load_full_cache()
                   if not _matches(e, kurve, modell, praedikat, X)]
        entries.append({
            "schema_version": CACHE_SCHEMA_VERSION,
            "kurve": kurve,
            "modell": modell,
            "praedikat": praedikat,
            "X": X,
            "treffer": treffer,
            "gescannt": gescannt
        })
        entries.sort(key=lambda e: (e["kurve"], e["modell"], e["praedikat"], e["X"]))
        _save_full_cache(entries)


def clear():
    """Löscht alle Einträge."""
    with _cache_lock:
        _save_full_cache([])
