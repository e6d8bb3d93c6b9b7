package com.example.projects.error;

public class ConflictException extends DomainException {
    public ConflictException() {
        super("conflict");
    }
}
