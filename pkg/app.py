from datetime import datetime

from dotenv import load_dotenv
from flask import Flask, jsonify, request

load_dotenv()

from src.commands import VERBS, Budgets, run_verb  # noqa: E402
from src.utils import BraidError, BudgetExceededError, configure_logging  # noqa: E402

configure_logging()

app = Flask(__name__)

BUDGET_FIELDS = ("max_endo_len", "max_strands", "max_depth", "max_rank", "max_states")


@app.route('/api/health')
def health_check():
    return jsonify({'status': 'healthy', 'timestamp': datetime.now().isoformat()})


@app.route('/api/verbs')
def list_verbs():
    return jsonify(sorted(VERBS))


@app.route('/api/<verb>', methods=['POST'])
def run(verb):
    """Body: {"words": [...], "options": {...}, "budgets": {...}}; answers like `braids --json`."""
    body = request.get_json(silent=True) or {}
    words = body.get('words', [])
    options = body.get('options', {})
    budget_values = body.get('budgets', {})
    if verb not in VERBS:
        return jsonify({'error': f'unknown verb {verb!r}'}), 404
    if not isinstance(words, list) or not isinstance(options, dict) or not isinstance(budget_values, dict):
        return jsonify({'error': "'words' must be a list, 'options' and 'budgets' objects"}), 400
    unknown = set(budget_values) - set(BUDGET_FIELDS)
    if unknown:
        return jsonify({'error': f'unknown budgets {sorted(unknown)}'}), 400
    try:
        budgets = Budgets(**budget_values)
        result = run_verb(verb, words, options, budgets=budgets)
        return jsonify(result.to_json())
    except BudgetExceededError as e:
        return jsonify({'error': str(e), 'kind': 'budget'}), 422
    except BraidError as e:
        return jsonify({'error': str(e), 'kind': type(e).__name__}), 400
    except (TypeError, ValueError) as e:
        # wrong number of words, unexpected options, non-positive budgets
        return jsonify({'error': str(e), 'kind': 'usage'}), 400


if __name__ == '__main__':
    app.run(debug=False, host='0.0.0.0', port=8080)
