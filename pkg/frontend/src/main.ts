import { LintClient } from './api.js';
import { EditorState } from './state.js';
import { buildApp } from './view.js';

const DEFAULT_SERVICE = 'http://127.0.0.1:8623';

function serviceUrl(): string {
	const fromQuery = new URLSearchParams(window.location.search).get('service');
	return (fromQuery ?? DEFAULT_SERVICE).replace(/\/$/, '');
}

const root = document.getElementById('app');
if (!root) throw new Error('missing #app container');

const state = new EditorState(new LintClient(serviceUrl()));
buildApp(root, state);
void state.loadCatalog();
