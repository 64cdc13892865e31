# Import all route modules here
from app.routes import api, health


# Register blueprints that aren't registered elsewhere
def register_blueprints(app):
    app.register_blueprint(api.bp)
    app.register_blueprint(health.bp)
