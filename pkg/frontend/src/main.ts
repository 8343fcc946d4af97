import { App } from './app.js';

const app = new App(document);
void app.start();
