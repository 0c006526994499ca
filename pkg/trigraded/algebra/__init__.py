"""Mathematical core: gradings, coefficient rings, Ext, Cta assembly, Bockstein pages, regions."""
